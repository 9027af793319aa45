// Acceptance suite: one pass/fail line per criterion. Exits nonzero when any
// criterion fails. Everything exact is checked at zero tolerance; numeric
// residuals are checked at the tolerances stated next to each sweep.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hcfam/diffop.hpp"
#include "hcfam/family_pairs.hpp"
#include "hcfam/jantzen.hpp"
#include "hcfam/module_family.hpp"
#include "hcfam/solutions.hpp"

using namespace hcfam;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("criterion %2d: %s  %s%s%s\n", num, pass ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : "  -- ", detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational rat(long n, long d = 1) { return Rational(n, d); }

bool check_1_bracket_table() {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport r = verify_bracket_table();
  double dt = seconds_since(t0);
  return r.all_pass() && r.results.size() == 3 && dt < 1.0;
}

bool check_4_module_axioms() {
  ModuleFamily fam(rat(1));
  for (int eps : {+1, -1}) {
    if (!fam.omega_scalar_report(24, eps).all_pass()) return false;
    if (!fam.bracket_consistency_report(24, eps).all_pass()) return false;
    if (!fam.ladder_product_report(24, eps).all_pass()) return false;
  }
  return true;
}

bool check_5_intertwiner() {
  Intertwiner psi(rat(1));
  if (!psi_consistency_report(psi, 20).all_pass()) return false;
  if (!psi_equivariance_report(psi, 20).all_pass()) return false;
  return true;
}

bool check_6_discrete_spectrum(std::string& detail) {
  Intertwiner psi(rat(1));
  std::vector<Rational> pts =
      reducibility_points(rat(1), {rat(-3), rat(0), true, false}, 10);
  if (pts.size() != 11) {
    detail = "expected 11 points";
    return false;
  }
  for (int m = 0; m <= 10; ++m) {
    Rational want = -rat(2) / rat(2 * m + 1).pow(2);
    if (pts[static_cast<size_t>(m)] != want) {
      detail = "point m=" + std::to_string(m) + " mismatch";
      return false;
    }
  }
  for (int m = 0; m <= 10; ++m) {
    JantzenReport rep = classify_fiber(pts[static_cast<size_t>(m)], psi, 24);
    const QuotientLayer* finite = nullptr;
    for (const auto& q : rep.quotients)
      if (!q.infinite) finite = &q;
    if (!finite || finite->weights.size() != static_cast<size_t>(2 * m + 1) ||
        finite->weights.front() != -m || finite->weights.back() != m) {
      detail = "finite quotient shape wrong at m=" + std::to_string(m);
      return false;
    }
  }
  return true;
}

bool check_7_classification(std::string& detail) {
  Intertwiner psi(rat(1));
  struct Sample {
    Rational e;
    SpectralKind kind;
    int level;
  };
  const Sample table[] = {
      {rat(-3), SpectralKind::NotInSpectrum, -1},
      {rat(-5, 2), SpectralKind::NotInSpectrum, -1},
      {rat(-2), SpectralKind::BoundState, 0},
      {rat(-1), SpectralKind::NotInSpectrum, -1},
      {rat(-2, 9), SpectralKind::BoundState, 1},
      {rat(-1, 10), SpectralKind::NotInSpectrum, -1},
      {rat(0), SpectralKind::ZeroEnergy, -1},
      {rat(1, 10), SpectralKind::ScatteringContinuum, -1},
      {rat(1), SpectralKind::ScatteringContinuum, -1},
      {rat(10), SpectralKind::ScatteringContinuum, -1},
  };
  for (const auto& s : table) {
    JantzenReport rep = classify_fiber(s.e, psi, 24);
    if (rep.classification.kind != s.kind || rep.classification.level != s.level) {
      detail = "classification wrong at E=" + s.e.to_string();
      return false;
    }
    int definite = 0;
    for (const auto& [order, label] : rep.definiteness)
      if (label == Definiteness::PositiveDefinite ||
          label == Definiteness::NegativeDefinite)
        ++definite;
    int want = s.kind == SpectralKind::NotInSpectrum ? 0 : 1;
    if (definite != want) {
      detail = "definite quotient count wrong at E=" + s.e.to_string();
      return false;
    }
  }
  return true;
}

bool check_8_analytic(std::string& detail, double& runtime) {
  auto t0 = std::chrono::steady_clock::now();
  for (const Rational& k : {rat(1), rat(2), rat(1, 2)}) {
    std::vector<Rational> pts =
        reducibility_points(k, {rat(-100000), rat(0), true, false}, 10);
    for (int m = 0; m <= 10; ++m)
      if (bound_energy(m + 1, k) != pts[static_cast<size_t>(m)]) {
        detail = "bound_energy disagrees with the reducibility list";
        return false;
      }
  }

  RadialProfile ground = RadialProfile::bound(1, 0, 1.0);
  if (!(ground.residual(1.0) < 1e-12)) {
    detail = "ground-state residual at r=1 above 1e-12";
    return false;
  }
  const double rs[] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  for (int n = 1; n <= 4; ++n)
    for (int l = -(n - 1); l <= n - 1; ++l) {
      RadialProfile p = RadialProfile::bound(n, l, 1.0);
      for (double r : rs) {
        double res;
        try {
          res = p.residual(r);
        } catch (const UnderflowNearNode&) {
          continue;
        }
        if (!(res < 1e-8)) {
          detail = "bound residual n=" + std::to_string(n) + " l=" + std::to_string(l);
          return false;
        }
      }
    }
  for (double e : {0.5, 1.0, 2.0})
    for (int l : {0, 1}) {
      RadialProfile p = RadialProfile::scattering(e, l, 1.0);
      for (double r = 0.5; r <= 5.0; r += 0.25)
        if (!(p.residual(r) < 1e-6)) {
          detail = "scattering residual E=" + std::to_string(e);
          return false;
        }
    }
  for (int l : {0, 1, 2}) {
    RadialProfile p = RadialProfile::zero_energy(l, 1.0);
    for (double r = 0.1; r <= 10.0; r += 0.3)
      if (!(p.residual(r) < 1e-8)) {
        detail = "zero-energy residual l=" + std::to_string(l);
        return false;
      }
  }
  runtime = seconds_since(t0);
  if (runtime >= 10.0) {
    detail = "numeric suite too slow";
    return false;
  }
  return true;
}

bool check_9_group_family(std::string& detail) {
  // membership as polynomial identities: j_i(x)^T D_x + D_x j_i(x) = 0
  PolyQ x = PolyQ::variable();
  auto d_entry = [&x](int i) { return i == 2 ? PolyQ::one() : x; };
  for (int i = 1; i <= 3; ++i) {
    MatPoly z = mat_basis(i);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        PolyQ v = z[b][a] * d_entry(b) + d_entry(a) * z[a][b];
        if (!v.is_zero()) {
          detail = "membership identity fails for j_" + std::to_string(i);
          return false;
        }
      }
  }
  if (classify_real_form(rat(-1)) != RealFormLabel::SplitSO21 ||
      classify_real_form(rat(0)) != RealFormLabel::EuclideanO2R2 ||
      classify_real_form(rat(1)) != RealFormLabel::CompactSO3) {
    detail = "real-form table mismatch";
    return false;
  }
  FamilyAlgebra alg;
  CheckReport r = iso_transport_report(alg, {rat(-1), rat(0), rat(1)});
  if (!r.all_pass()) {
    detail = "transport: " + r.first_failure()->identity;
    return false;
  }
  return true;
}

bool check_10_negative_controls(std::string& detail) {
  // every single structure constant, perturbed by 1, must break the
  // transport suite with a named identity
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (int c = 0; c < 3; ++c) {
        StructureTable t = FamilyAlgebra::default_real_table();
        t[i][j][c] += FamilyPoly::one();
        FamilyAlgebra alg(t, FamilyAlgebra::default_ladder_table());
        CheckReport r = iso_transport_report(alg, {rat(1)});
        if (r.all_pass() || r.first_failure()->identity.empty()) {
          detail = "structure-constant perturbation escaped detection";
          return false;
        }
      }
    }
  // every psi coefficient, perturbed by 1
  Intertwiner psi(rat(1));
  for (int n = 1; n <= 4; ++n)
    for (int idx = 0; idx <= n; ++idx) {
      CheckReport r = psi_consistency_report(psi, 4, PsiTamper{n, idx, rat(1)});
      if (r.all_pass() || r.first_failure()->identity.empty()) {
        detail = "psi perturbation escaped detection";
        return false;
      }
    }
  // the Casimir constant
  CheckReport r = verify_casimir_identity(rat(1));
  if (r.all_pass() || r.first_failure()->identity.empty()) {
    detail = "casimir perturbation escaped detection";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  std::string detail;
  double numeric_runtime = 0.0;

  criterion(1, "bracket table [L,Bx]=By, [By,L]=Bx, [Bx,By]=2HL, exact, < 1 s",
            check_1_bracket_table());
  criterion(2, "centralizer [H,X]=0 for X in {L, L^2, Bx, By, I}",
            verify_centralizer().all_pass());
  criterion(3, "casimir identity -1/2(Bx^2+By^2)+k^2/2 = H(L^2-1/4), k symbolic",
            verify_casimir_identity().all_pass());
  criterion(4, "module axioms on |n| <= 23 of the N=24 window, both flags, both sides",
            check_4_module_axioms());
  criterion(5, "intertwiner recursion = closed form to |n| <= 20, equivariance exact",
            check_5_intertwiner());

  detail.clear();
  criterion(6, "discrete spectrum list and 2m+1 quotient shapes",
            check_6_discrete_spectrum(detail), detail);
  detail.clear();
  criterion(7, "fiber classification across the sample set", check_7_classification(detail),
            detail);
  detail.clear();
  bool ok8 = check_8_analytic(detail, numeric_runtime);
  criterion(8, "analytic cross-check, residual tolerances, runtime < 10 s", ok8,
            ok8 ? "numeric suite " + std::to_string(numeric_runtime) + " s" : detail);
  detail.clear();
  criterion(9, "matrix family membership, real forms, transport", check_9_group_family(detail),
            detail);
  detail.clear();
  criterion(10, "negative controls: perturbations fail with named identities",
            check_10_negative_controls(detail), detail);

  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
