#include "hcfam/diffop.hpp"

#include <json.hpp>

#include <vector>

namespace hcfam {

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

void DiffOp::add_to(Key key, const CoeffFn& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOp DiffOp::angular_momentum() {
  DiffOp op;
  op.set({1, 0}, CoeffFn::coord_y());
  op.set({0, 1}, -CoeffFn::coord_x());
  return op;
}

DiffOp DiffOp::hamiltonian() {
  DiffOp op;
  op.set({2, 0}, CoeffFn::one().scaled(Rational(-1, 2)));
  op.set({0, 2}, CoeffFn::one().scaled(Rational(-1, 2)));
  // -k/r = -k*r/(x^2+y^2)
  op.set({0, 0}, CoeffFn(Bivar::zero(), -Bivar::constant(KPoly::variable()), 1));
  return op;
}

DiffOp DiffOp::lenz_x() {
  DiffOp op;
  op.set({0, 2}, CoeffFn::coord_x());
  op.set({1, 1}, -CoeffFn::coord_y());
  op.set({1, 0}, CoeffFn::one().scaled(Rational(-1, 2)));
  // k*x/r = k*x*r/(x^2+y^2)
  op.set({0, 0}, CoeffFn(Bivar::zero(), Bivar::monomial(1, 0, KPoly::variable()), 1));
  return op;
}

DiffOp DiffOp::lenz_y() {
  DiffOp op;
  op.set({2, 0}, CoeffFn::coord_y());
  op.set({1, 1}, -CoeffFn::coord_x());
  op.set({0, 1}, CoeffFn::one().scaled(Rational(-1, 2)));
  op.set({0, 0}, CoeffFn(Bivar::zero(), Bivar::monomial(0, 1, KPoly::variable()), 1));
  return op;
}

DiffOp DiffOp::generator(GeneratorTag tag) {
  switch (tag) {
    case GeneratorTag::H: return hamiltonian();
    case GeneratorTag::L: return angular_momentum();
    case GeneratorTag::Bx: return lenz_x();
    case GeneratorTag::By: return lenz_y();
    case GeneratorTag::Lsq: return angular_momentum() * angular_momentum();
    case GeneratorTag::Identity: return identity();
  }
  return zero();
}

DiffOp DiffOp::operator-() const {
  DiffOp r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [key, c] : o.terms_) add_to(key, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [key, c] : o.terms_) add_to(key, -c);
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  DiffOp r;
  for (const auto& [ka, fa] : a.terms_) {
    const int c = ka.first, d = ka.second;
    for (const auto& [kb, gb] : b.terms_) {
      // dx^c dy^d (g T) = sum binom(c,i) binom(d,j) (dx^{c-i} dy^{d-j} g) dx^i dy^j T
      std::vector<std::vector<CoeffFn>> dg(
          static_cast<size_t>(c) + 1,
          std::vector<CoeffFn>(static_cast<size_t>(d) + 1));
      dg[0][0] = gb;
      for (int i = 1; i <= c; ++i) dg[i][0] = dg[i - 1][0].deriv(0);
      for (int i = 0; i <= c; ++i)
        for (int j = 1; j <= d; ++j) dg[i][j] = dg[i][j - 1].deriv(1);
      for (int i = 0; i <= c; ++i)
        for (int j = 0; j <= d; ++j) {
          long w = binom(c, i) * binom(d, j);
          CoeffFn piece = (fa * dg[c - i][d - j]).scaled(Rational(w));
          r.add_to({i + kb.first, j + kb.second}, piece);
        }
    }
  }
  return r;
}

DiffOp DiffOp::scaled(const Rational& v) const {
  DiffOp r;
  if (v.is_zero()) return r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, c.scaled(v));
  return r;
}

DiffOp DiffOp::order_component(int m) const {
  DiffOp r;
  for (const auto& [key, c] : terms_)
    if (key.first + key.second == m) r.terms_.emplace(key, c);
  return r;
}

DiffOp DiffOp::k_component(int d) const {
  DiffOp r;
  for (const auto& [key, c] : terms_) {
    CoeffFn kc = c.k_component(d);
    if (!kc.is_zero()) r.terms_.emplace(key, std::move(kc));
  }
  return r;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    std::string cs = c.to_string();
    std::string mono;
    if (key.first > 0)
      mono += "dx" + (key.first > 1 ? "^" + std::to_string(key.first) : "");
    if (key.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += "dy" + (key.second > 1 ? "^" + std::to_string(key.second) : "");
    }
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else if (cs == "-1") {
      term = "-" + mono;
    } else {
      if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
      term = cs + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string DiffOp::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, c] : terms_) {
    nlohmann::json item;
    item["dx"] = key.first;
    item["dy"] = key.second;
    item["coeff"] = c.to_string();
    arr.push_back(std::move(item));
  }
  return arr.dump();
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

CheckReport verify_centralizer() {
  CheckReport report;
  const DiffOp h = DiffOp::hamiltonian();
  const std::vector<std::pair<std::string, DiffOp>> gens = {
      {"[H,L]=0", DiffOp::angular_momentum()},
      {"[H,L^2]=0", DiffOp::generator(GeneratorTag::Lsq)},
      {"[H,Bx]=0", DiffOp::lenz_x()},
      {"[H,By]=0", DiffOp::lenz_y()},
      {"[H,I]=0", DiffOp::identity()},
  };
  for (const auto& [name, x] : gens) {
    DiffOp rem = commutator(h, x);
    report.add(name, rem.is_zero(), rem.is_zero() ? "" : "remainder: " + rem.to_string());
  }
  return report;
}

CheckReport verify_casimir_identity(const Rational& shift) {
  CheckReport report;
  const DiffOp h = DiffOp::hamiltonian();
  const DiffOp bx = DiffOp::lenz_x();
  const DiffOp by = DiffOp::lenz_y();
  const DiffOp lsq = DiffOp::generator(GeneratorTag::Lsq);

  // k^2/2 (+ shift) as an operator
  KPoly half_ksq = KPoly::monomial(2, GaussianRational(Rational(1, 2)));
  DiffOp cas_const = DiffOp::from_coeff(CoeffFn::scalar(half_ksq)) +
                     DiffOp::identity().scaled(shift);

  DiffOp lhs = (bx * bx + by * by).scaled(Rational(-1, 2)) + cas_const;
  DiffOp rhs = h * (lsq - DiffOp::identity().scaled(Rational(1, 4)));
  DiffOp rem = lhs - rhs;
  report.add("casimir: -1/2(Bx^2+By^2) + k^2/2 = H(L^2-1/4)", rem.is_zero(),
             rem.is_zero() ? "" : "remainder: " + rem.to_string());

  // Graded cross-checks on the unshifted identity: the pure third-order
  // derivative parts of the two sides agree, and the k-degree-0 part of the
  // left side is exactly (free Hamiltonian) * (L^2 - 1/4).
  DiffOp lhs0 = (bx * bx + by * by).scaled(Rational(-1, 2)) +
                DiffOp::from_coeff(CoeffFn::scalar(half_ksq));
  DiffOp ord3 = lhs0.order_component(3) - rhs.order_component(3);
  report.add("casimir: third-order graded part", ord3.is_zero(),
             ord3.is_zero() ? "" : "remainder: " + ord3.to_string());

  DiffOp h_free;
  h_free += DiffOp::monomial(2, 0, CoeffFn::one().scaled(Rational(-1, 2)));
  h_free += DiffOp::monomial(0, 2, CoeffFn::one().scaled(Rational(-1, 2)));
  DiffOp k0 = lhs0.k_component(0) -
              h_free * (lsq - DiffOp::identity().scaled(Rational(1, 4)));
  report.add("casimir: k-degree-0 graded part", k0.is_zero(),
             k0.is_zero() ? "" : "remainder: " + k0.to_string());
  return report;
}

CheckReport verify_bracket_table() {
  CheckReport report;
  const DiffOp h = DiffOp::hamiltonian();
  const DiffOp l = DiffOp::angular_momentum();
  const DiffOp bx = DiffOp::lenz_x();
  const DiffOp by = DiffOp::lenz_y();

  DiffOp r1 = commutator(l, bx) - by;
  report.add("[L,Bx]=By", r1.is_zero(), r1.is_zero() ? "" : "remainder: " + r1.to_string());
  DiffOp r2 = commutator(by, l) - bx;
  report.add("[By,L]=Bx", r2.is_zero(), r2.is_zero() ? "" : "remainder: " + r2.to_string());
  DiffOp r3 = commutator(bx, by) - (h * l).scaled(Rational(2));
  report.add("[Bx,By]=2HL", r3.is_zero(), r3.is_zero() ? "" : "remainder: " + r3.to_string());
  return report;
}

DiffOp random_diffop(std::mt19937& rng, int max_order) {
  std::uniform_int_distribution<int> ord(0, max_order);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> deg(0, 1);
  std::uniform_int_distribution<int> nterms(1, 3);
  DiffOp op;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    int c = ord(rng), d = ord(rng);
    Bivar p = Bivar::monomial(deg(rng), deg(rng),
                              KPoly::constant(GaussianRational(small(rng))));
    Bivar q = deg(rng) == 0
                  ? Bivar::zero()
                  : Bivar::constant(KPoly::constant(GaussianRational(small(rng))));
    op += DiffOp::monomial(c, d, CoeffFn(std::move(p), std::move(q), deg(rng)));
  }
  return op;
}

}  // namespace hcfam
