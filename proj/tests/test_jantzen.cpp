#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcfam/jantzen.hpp"

using namespace hcfam;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

const QuotientLayer* layer_with_order(const JantzenReport& r, int order) {
  for (const auto& q : r.quotients)
    if (q.order == order) return &q;
  return nullptr;
}

int definite_count(const JantzenReport& r) {
  int c = 0;
  for (const auto& [order, label] : r.definiteness)
    if (label == Definiteness::PositiveDefinite ||
        label == Definiteness::NegativeDefinite)
      ++c;
  return c;
}

}  // namespace

TEST_CASE("closed-form components") {
  Intertwiner psi(rat(1));
  CHECK(psi.component(0) == PolyQ::one());
  CHECK(psi.component(1) == PolyQ{rat(1, 4), rat(1, 8)});          // (E+2)/8
  CHECK(psi.component(2) == PolyQ{rat(1, 16), rat(5, 16), rat(9, 64)});  // (E+2)(9E+2)/64
  CHECK(psi.component(-2) == psi.component(2));
  CHECK(psi.component(5).degree() == 5);
}

TEST_CASE("recursion equals closed form out to degree 20") {
  for (const Rational& k : {rat(1), rat(2), rat(1, 2)}) {
    Intertwiner psi(k);
    CheckReport r = psi_consistency_report(psi, 20);
    CHECK(r.results.size() == 21);
    for (const auto& res : r.results) {
      INFO(res.identity, " ", res.detail);
      CHECK(res.pass);
    }
  }
}

TEST_CASE("psi negative control: any tampered coefficient is caught by name") {
  Intertwiner psi(rat(1));
  for (int n = 1; n <= 4; ++n)
    for (int idx = 0; idx <= n; ++idx) {
      CheckReport r = psi_consistency_report(psi, 4, PsiTamper{n, idx, rat(1)});
      REQUIRE(!r.all_pass());
      CHECK(r.first_failure()->identity ==
            "psi_" + std::to_string(n) + " recursion matches closed form");
    }
}

TEST_CASE("equivariance through the module actions") {
  for (const Rational& k : {rat(1), rat(3, 2)}) {
    Intertwiner psi(k);
    CheckReport r = psi_equivariance_report(psi, 12);
    for (const auto& res : r.results) {
      INFO(res.identity, " ", res.detail);
      CHECK(res.pass);
    }
  }
}

TEST_CASE("the intertwiner is blind to the family flag") {
  Intertwiner psi(rat(1));
  ModuleFamily fam(rat(1));
  for (int eps : {+1, -1})
    for (int n = -6; n <= 6; ++n) {
      ModuleVector fn = fam.basis(Side::Primal, n, eps, 8);
      ModuleVector lhs = psi.apply(fam.act(GeneratorAction::APlus, fn));
      ModuleVector rhs = fam.act(GeneratorAction::APlus, psi.apply(fn));
      CHECK(lhs == rhs);
      CHECK(psi.apply(fn).entries.at(n) == lift_to_gaussian(psi.component(n)));
    }
}

TEST_CASE("filtration at a generic point is trivial") {
  Intertwiner psi(rat(1));
  JantzenReport r = jantzen_filtration(GaussianRational(rat(1)), psi, 8);
  REQUIRE(r.quotients.size() == 1);
  CHECK(r.quotients[0].order == 0);
  CHECK(r.quotients[0].weights.size() == 17);
  CHECK(r.quotients[0].infinite);
}

TEST_CASE("filtration at the ground bound state") {
  Intertwiner psi(rat(1));
  JantzenReport r = jantzen_filtration(GaussianRational(rat(-2)), psi, 8);
  REQUIRE(r.quotients.size() == 2);
  const QuotientLayer* q0 = layer_with_order(r, 0);
  const QuotientLayer* q1 = layer_with_order(r, 1);
  REQUIRE(q0);
  REQUIRE(q1);
  CHECK(q0->weights == std::vector<int>{0});
  CHECK(!q0->infinite);
  CHECK(q1->infinite);
  CHECK(q1->weights.size() == 16);
}

TEST_CASE("filtration at the first excited level") {
  Intertwiner psi(rat(1));
  JantzenReport r = jantzen_filtration(GaussianRational(rat(-2, 9)), psi, 8);
  const QuotientLayer* q0 = layer_with_order(r, 0);
  const QuotientLayer* q1 = layer_with_order(r, 1);
  REQUIRE(q0);
  REQUIRE(q1);
  CHECK(q0->weights == std::vector<int>{-1, 0, 1});
  for (int n : q1->weights) CHECK(std::abs(n) >= 2);
}

TEST_CASE("filtration partitions the window at many rational points") {
  Intertwiner psi(rat(1));
  for (const Rational& e :
       {rat(-3), rat(-2), rat(-1), rat(-2, 9), rat(-2, 25), rat(0), rat(7, 5)}) {
    JantzenReport r = jantzen_filtration(GaussianRational(e), psi, 10);
    size_t total = 0;
    for (const auto& q : r.quotients) total += q.weights.size();
    CHECK(total == 21);
  }
}

TEST_CASE("filtration over a non-real point is trivial") {
  Intertwiner psi(rat(1));
  JantzenReport r =
      jantzen_filtration(GaussianRational(rat(0), rat(1)), psi, 6);
  CHECK(!r.real_point);
  REQUIRE(r.quotients.size() == 1);
  CHECK(r.quotients[0].order == 0);
  std::string json = jantzen_report_to_json(r);
  CHECK(json.find("not_applicable") != std::string::npos);
}

TEST_CASE("hermitian form diagonal values") {
  Intertwiner psi(rat(1));
  CHECK(hermitian_form(rat(1), 0, 1, 1, psi) == rat(3, 8));
  CHECK(hermitian_form(rat(-2), 0, 0, 0, psi) == rat(1));
  CHECK(hermitian_form(rat(-2), 1, 2, 2, psi) == rat(-1, 4));
  CHECK(hermitian_form(rat(1), 0, 1, 2, psi) == rat(0));  // diagonal form
  CHECK_THROWS_AS(hermitian_form(rat(-2), 1, 0, 0, psi), DivisionByLowerOrder);
}

TEST_CASE("classification across the acceptance sample set") {
  Intertwiner psi(rat(1));
  struct Sample {
    Rational e;
    Classification want;
  };
  const Sample samples[] = {
      {rat(-3), {SpectralKind::NotInSpectrum, -1}},
      {rat(-5, 2), {SpectralKind::NotInSpectrum, -1}},
      {rat(-2), {SpectralKind::BoundState, 0}},
      {rat(-1), {SpectralKind::NotInSpectrum, -1}},
      {rat(-2, 9), {SpectralKind::BoundState, 1}},
      {rat(-1, 10), {SpectralKind::NotInSpectrum, -1}},
      {rat(0), {SpectralKind::ZeroEnergy, -1}},
      {rat(1, 10), {SpectralKind::ScatteringContinuum, -1}},
      {rat(1), {SpectralKind::ScatteringContinuum, -1}},
      {rat(10), {SpectralKind::ScatteringContinuum, -1}},
  };
  for (const auto& s : samples) {
    JantzenReport r = classify_fiber(s.e, psi, 24);
    INFO("e = ", s.e.to_string());
    CHECK(r.classification == s.want);
    if (r.classification.kind != SpectralKind::NotInSpectrum)
      CHECK(definite_count(r) == 1);
    else
      CHECK(definite_count(r) == 0);
  }
}

TEST_CASE("classification details at e = -1 and e = -2") {
  Intertwiner psi(rat(1));
  JantzenReport r1 = classify_fiber(rat(-1), psi, 8);
  CHECK(r1.form_diagonal.at({0, 1}) == rat(1, 8));
  CHECK(r1.form_diagonal.at({0, 2}) == rat(-7, 64));
  CHECK(r1.definiteness.at(0) == Definiteness::Indefinite);

  JantzenReport r2 = classify_fiber(rat(-2), psi, 8);
  CHECK(r2.form_diagonal.at({0, 0}) == rat(1));
  CHECK(r2.form_diagonal.at({1, 1}) == rat(1, 8));
  CHECK(r2.form_diagonal.at({1, 2}) == rat(-1, 4));
  CHECK(r2.definiteness.at(0) == Definiteness::PositiveDefinite);
  CHECK(r2.definiteness.at(1) == Definiteness::Indefinite);
}

TEST_CASE("indefinite label does not depend on the window seeing a sign flip") {
  // At e = -1/10, k = 1 the first negative ladder factor is the third; a
  // window of 2 would enumerate positive entries only.
  Intertwiner psi(rat(1));
  JantzenReport r = classify_fiber(rat(-1, 10), psi, 2);
  CHECK(r.classification.kind == SpectralKind::NotInSpectrum);
  CHECK(r.definiteness.at(0) == Definiteness::Indefinite);
}

TEST_CASE("scattering and zero-energy fibers are positive definite") {
  Intertwiner psi(rat(1));
  for (const Rational& e : {rat(0), rat(1, 10), rat(1), rat(10)}) {
    JantzenReport r = classify_fiber(e, psi, 12);
    REQUIRE(r.quotients.size() == 1);
    CHECK(r.definiteness.at(0) == Definiteness::PositiveDefinite);
  }
}

TEST_CASE("reducibility points") {
  CHECK(reducibility_points(rat(1), {rat(-3), rat(0), true, false}, 2) ==
        std::vector<Rational>{rat(-2), rat(-2, 9), rat(-2, 25)});
  CHECK(reducibility_points(rat(1), {rat(0), rat(10), false, true}, 5).empty());
  CHECK(reducibility_points(rat(2), {rat(-9), rat(0), true, false}, 0) ==
        std::vector<Rational>{rat(-8)});
}

TEST_CASE("bound_state_index inverts the energy formula") {
  for (const Rational& k : {rat(1), rat(2), rat(1, 2), rat(3, 7)}) {
    for (int m = 0; m <= 10; ++m) {
      Rational e = -(k * k * rat(2)) / rat(2 * m + 1).pow(2);
      CHECK(bound_state_index(e, k) == m);
    }
    CHECK(!bound_state_index(rat(-1, 3), k).has_value());
    CHECK(!bound_state_index(rat(1), k).has_value());
  }
}

TEST_CASE("classify_fiber marks exactly the reducibility points as bound states") {
  Intertwiner psi(rat(1));
  std::vector<Rational> bound =
      reducibility_points(rat(1), {rat(-3), rat(0), true, false}, 10);
  for (const Rational& e : bound) {
    JantzenReport r = classify_fiber(e, psi, 24);
    CHECK(r.classification.kind == SpectralKind::BoundState);
  }
  for (long num = -30; num < 0; ++num) {
    Rational e(num, 10);
    bool is_bound = false;
    for (const Rational& b : bound) is_bound = is_bound || b == e;
    JantzenReport r = classify_fiber(e, psi, 24);
    CHECK((r.classification.kind == SpectralKind::BoundState) == is_bound);
  }
}

TEST_CASE("finite quotient at level m has dimension 2m+1 with weights -m..m") {
  Intertwiner psi(rat(1));
  for (int m = 0; m <= 6; ++m) {
    Rational e = -rat(2) / rat(2 * m + 1).pow(2);
    JantzenReport r = classify_fiber(e, psi, 10);
    const QuotientLayer* q0 = layer_with_order(r, 0);
    REQUIRE(q0);
    CHECK(q0->weights.size() == static_cast<size_t>(2 * m + 1));
    CHECK(q0->weights.front() == -m);
    CHECK(q0->weights.back() == m);
    const QuotientLayer* q1 = layer_with_order(r, 1);
    REQUIRE(q1);
    for (int n : q1->weights) CHECK(std::abs(n) >= m + 1);
    CHECK(definite_count(r) == 1);
    CHECK(r.definiteness.at(0) == Definiteness::PositiveDefinite);
    CHECK(r.definiteness.at(1) == Definiteness::Indefinite);
  }
}

TEST_CASE("window too small for a bound-state level is an explicit error") {
  Intertwiner psi(rat(1));
  Rational e5 = -rat(2) / rat(11).pow(2);
  CHECK_THROWS_AS(classify_fiber(e5, psi, 4), std::invalid_argument);
}

TEST_CASE("quotient structure is independent of the normalization up to layer shift") {
  Intertwiner unit(rat(1));
  Intertwiner shifted(rat(1), PolyQ{rat(2), rat(1)});  // psi0 = E + 2
  JantzenReport a = classify_fiber(rat(-2), unit, 8);
  JantzenReport b = classify_fiber(rat(-2), shifted, 8);
  REQUIRE(a.quotients.size() == b.quotients.size());
  for (size_t i = 0; i < a.quotients.size(); ++i) {
    CHECK(b.quotients[i].order == a.quotients[i].order + 1);
    CHECK(b.quotients[i].weights == a.quotients[i].weights);
    CHECK(b.quotients[i].infinite == a.quotients[i].infinite);
  }
  // away from the extra root nothing changes
  JantzenReport c = classify_fiber(rat(-2, 9), unit, 8);
  JantzenReport d = classify_fiber(rat(-2, 9), shifted, 8);
  for (size_t i = 0; i < c.quotients.size(); ++i) {
    CHECK(d.quotients[i].order == c.quotients[i].order);
    CHECK(d.quotients[i].weights == c.quotients[i].weights);
  }
}

TEST_CASE("form invariance under the transported conjugation") {
  Intertwiner psi(rat(1));
  CheckReport r = form_invariance_report(psi, 8, {rat(1), rat(-2), rat(-2, 9), rat(-1)});
  for (const auto& res : r.results) {
    INFO(res.identity, " ", res.detail);
    CHECK(res.pass);
  }
}

TEST_CASE("report json snapshot at the ground state") {
  Intertwiner psi(rat(1));
  JantzenReport r = classify_fiber(rat(-2), psi, 3);
  CHECK(jantzen_report_to_json(r) ==
        R"({"classification":{"kind":"bound_state","level":0},)"
        R"("definiteness":{"0":"positive_definite","1":"indefinite"},)"
        R"("form":[{"layer":0,"value":"1","weight":0},)"
        R"({"layer":1,"value":"3/2","weight":-3},{"layer":1,"value":"-1/4","weight":-2},)"
        R"({"layer":1,"value":"1/8","weight":-1},{"layer":1,"value":"1/8","weight":1},)"
        R"({"layer":1,"value":"-1/4","weight":2},{"layer":1,"value":"3/2","weight":3}],)"
        R"("k":"1","layers":[{"dim":1,"order":0,"weights":[0]},)"
        R"({"dim":"infinite","order":1,"weights":[-3,-2,-1,1,2,3]}],)"
        R"("point":"-2","schema":1,"window":3})");
}
