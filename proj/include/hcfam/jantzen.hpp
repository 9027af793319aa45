#pragma once

// Intertwiners from the module family to its twisted dual, the induced
// filtration of every fiber by vanishing orders, the invariant Hermitian
// forms on the filtration quotients, and the resulting algebraic
// classification of the energy line: scattering continuum, zero energy,
// bound states at -k^2/(2(m+1/2)^2), or not in the spectrum.
//
// The weight-n component of the intertwiner is
//   psi_n = psi_0 / 2^|n| * prod_{j=1}^{|n|} (k^2/2 + E (j-1/2)^2),
// normalized by psi_0 = 1 (the zero-shift convention for the filtration).

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hcfam/module_family.hpp"
#include "hcfam/polynomial.hpp"
#include "hcfam/report.hpp"

namespace hcfam {

struct DivisionByLowerOrder : std::runtime_error {
  explicit DivisionByLowerOrder(const std::string& what) : std::runtime_error(what) {}
};

class Intertwiner {
 public:
  explicit Intertwiner(Rational coupling, PolyQ normalization = PolyQ::one());

  const Rational& coupling() const { return k_; }
  const PolyQ& normalization() const { return psi0_; }

  // 1/2 (k^2/2 + E (j-1/2)^2), the j-th ladder factor.
  PolyQ factor(int j) const;

  // Closed-form component psi_n (memoized; psi_{-n} = psi_n).
  const PolyQ& component(int n) const;

  // Same component rebuilt by pushing the equivariance constraint
  // psi(A+- f_n) = A+- psi(f_n) weight by weight from psi_0; positive n use
  // the raising chain, negative n the lowering chain.
  PolyQ component_by_recursion(int n) const;

  // Applies the intertwiner to a primal vector, producing the dual vector
  // with components multiplied by psi_n.
  ModuleVector apply(const ModuleVector& v) const;

 private:
  Rational k_;
  PolyQ psi0_;
  mutable std::vector<PolyQ> memo_;  // by |n|
};

// Negative-control hook: adds delta to one coefficient of the closed-form
// table before comparing against the recursion.
struct PsiTamper {
  int n = 0;
  int coeff_index = 0;
  Rational delta;
};

// recursion == closed form and psi_n == psi_{-n} for |n| <= n_max.
CheckReport psi_consistency_report(const Intertwiner& psi, int n_max,
                                   const std::optional<PsiTamper>& tamper = std::nullopt);

// psi(A+- f_n) = A+- psi(f_n) through the module actions, exact.
CheckReport psi_equivariance_report(const Intertwiner& psi, int n_max);

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Zero, NotApplicable };

enum class SpectralKind { ScatteringContinuum, ZeroEnergy, BoundState, NotInSpectrum };

struct Classification {
  SpectralKind kind = SpectralKind::NotInSpectrum;
  int level = -1;  // m for a bound state, else -1
  friend bool operator==(const Classification& a, const Classification& b) {
    return a.kind == b.kind && a.level == b.level;
  }
};

struct QuotientLayer {
  int order = 0;             // common vanishing order on this quotient
  std::vector<int> weights;  // weights within the window, ascending
  bool infinite = false;     // quotient continues beyond every window
};

struct JantzenReport {
  GaussianRational point;
  bool real_point = true;
  Rational k;
  int window = 0;
  std::map<int, int> layer_orders;                    // weight -> order
  std::vector<QuotientLayer> quotients;               // ascending order
  std::map<std::pair<int, int>, Rational> form_diagonal;  // (order, weight) -> value
  std::map<int, Definiteness> definiteness;           // order -> label
  Classification classification;
};

// Filtration structure only (works over Gaussian rational points too; the
// Hermitian data is filled by classify_fiber for real points).
JantzenReport jantzen_filtration(const GaussianRational& e, const Intertwiner& psi,
                                 int window);

// delta_st * ((E-e)^{-layer} psi_s)(e); throws DivisionByLowerOrder when the
// component's vanishing order is below the requested layer.
Rational hermitian_form(const Rational& e, int layer, int s_weight, int t_weight,
                        const Intertwiner& psi);

// <v, w>_{e,layer} = ((E-e)^{-layer} sum_n v_n psi_n conj(w_n))(e) for primal
// vectors v, w.
GaussianRational form_value(const Rational& e, int layer, const ModuleVector& v,
                            const ModuleVector& w, const Intertwiner& psi);

// Full per-point report: filtration, form diagonal, definiteness per
// quotient, spectral classification. e must be real; for a bound-state point
// e_m the window must satisfy window >= m+2.
JantzenReport classify_fiber(const Rational& e, const Intertwiner& psi, int window);

struct EnergyInterval {
  Rational lo, hi;
  bool lo_closed = true, hi_closed = true;
  bool contains(const Rational& v) const {
    if (v < lo || (v == lo && !lo_closed)) return false;
    if (v > hi || (v == hi && !hi_closed)) return false;
    return true;
  }
};

// Exact bound-state energies -k^2/(2(m+1/2)^2), m = 0..m_max, inside the
// interval, ascending in m.
std::vector<Rational> reducibility_points(const Rational& k, const EnergyInterval& window,
                                          int m_max);

// m such that e = -k^2/(2(m+1/2)^2), when it exists.
std::optional<int> bound_state_index(const Rational& e, const Rational& k);

// <X v, w> + <v, sigma(X) w> = 0 with sigma(J) = -J, sigma(A+-) = A-+ (the
// conjugation transported to the ladder basis), checked both as polynomial
// identities on window pairs and evaluated on the quotient forms at the given
// real points.
CheckReport form_invariance_report(const Intertwiner& psi, int window,
                                   const std::vector<Rational>& points);

std::string to_string(Definiteness d);
std::string to_string(const Classification& c);
std::string jantzen_report_to_json(const JantzenReport& report, bool pretty = false);

}  // namespace hcfam
