#pragma once

// The two concrete weight-module families (flag eps = +1 / -1) generated by
// the weight-zero line, together with their twisted-dual partners. Vectors
// are finite maps from integer weights to polynomials in E with Gaussian
// rational coefficients; all generator actions are exact.
//
// Primal actions (k the configured rational coupling):
//   J f_n  = n f_n
//   A+ f_n = f_{n+1}                          (n >= 0)
//          = -1/2 (k^2/2 + E (n+1/2)^2) f_{n+1}   (n < 0)
//   A- f_n = -1/2 (k^2/2 + E (n-1/2)^2) f_{n-1}   (n > 0)
//          = f_{n-1}                          (n <= 0)
//   s f_n  = eps (-i)^n f_{-n}
// Dual actions mirror these with the coefficient moved to the other branch
// and a sign flip, so the dual satisfies the same bracket table.

#include <map>
#include <stdexcept>
#include <string>

#include "hcfam/polynomial.hpp"
#include "hcfam/report.hpp"

namespace hcfam {

enum class Side { Primal, Dual };
enum class GeneratorAction { J, APlus, AMinus, Omega, Reflection };

struct TruncationOverflow : std::runtime_error {
  explicit TruncationOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct ModuleVector {
  Side side = Side::Primal;
  int eps = +1;     // family flag, +1 or -1
  int window = 24;  // weights stored in [-window, window]
  std::map<int, PolyG> entries;

  bool is_zero() const { return entries.empty(); }
  void prune() {
    for (auto it = entries.begin(); it != entries.end();)
      it = it->second.is_zero() ? entries.erase(it) : std::next(it);
  }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.side == b.side && a.eps == b.eps && a.window == b.window &&
           a.entries == b.entries;
  }

  std::string to_json() const;
};

class ModuleFamily {
 public:
  explicit ModuleFamily(Rational coupling = Rational(1));

  const Rational& coupling() const { return k_; }

  ModuleVector basis(Side side, int n, int eps = +1, int window = 24) const;

  // Exact generator action; throws TruncationOverflow when a ladder step
  // would leave the stored weight window.
  ModuleVector act(GeneratorAction g, const ModuleVector& v) const;

  // -1/2 (k^2/2 + E (n + offset/2)^2) as a polynomial in E.
  PolyG ladder_coeff(int n, int offset) const;
  // omega(E) = -E/4 - k^2/2, the scalar by which the Casimir acts.
  PolyG omega_scalar() const;

  // Omega v computed through E J^2 + E J + 2 A- A+ equals omega(E) v on all
  // interior weights, primal and dual.
  CheckReport omega_scalar_report(int window, int eps) const;
  // [A+,A-] = E J, [J,A+] = A+, [J,A-] = -A- on interior basis vectors.
  // expected_shift perturbs the expected [A+,A-] eigenvalue (negative-control
  // hook).
  CheckReport bracket_consistency_report(int window, int eps,
                                         const Rational& expected_shift = Rational(0)) const;
  // s(X f_n) = (s.X)(s f_n) for X in {J, A+, A-}, with s.J = -J,
  // s.A+ = -i A-, s.A- = +i A+; also s^2 = identity.
  CheckReport reflection_equivariance_report(int window, int eps) const;

  // A-A+ f_n and A+A- f_n are scalar on every weight line, with the scalars
  // -1/2(k^2/2 + E(n+-1/2)^2).
  CheckReport ladder_product_report(int window, int eps) const;

 private:
  ModuleVector shifted_action(const ModuleVector& v, int shift, bool raising) const;

  Rational k_;
};

// Evaluation of every coefficient at E = e.
std::map<int, GaussianRational> fiber_evaluate(const ModuleVector& v,
                                               const GaussianRational& e);

}  // namespace hcfam
