#pragma once

// Numeric evaluation of the physical radial solutions and residual checks of
// the radial eigenvalue equation
//   -1/2 (R'' + R'/r - l^2 R / r^2) - k R / r = E R,
// the polar-coordinate radial reduction of the planar problem. Profiles:
//   bound      (E = -k^2/(2(n-1/2)^2)):  (br)^|l| e^{-br/2} 1F1(-n+|l|+1; 2|l|+1; br),
//              b = 2k/(n-1/2)
//   scattering (E > 0, p = sqrt(2E)):    (2pr)^|l| e^{-ipr} 1F1(|l|+1/2 + ik/p; 2|l|+1; 2ipr)
//   zero energy:                         J_{2|l|}(sqrt(8 k r))
// The zero-energy form solves the position-space radial equation at E = 0;
// substituting u = sqrt(8kr) reduces it to the Bessel equation of order 2|l|.
// Derivatives are analytic (termwise), never finite differences.

#include <complex>
#include <stdexcept>
#include <string>

#include "hcfam/rational.hpp"

namespace hcfam {

struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};
struct PoleAtB : std::runtime_error {
  explicit PoleAtB(const std::string& what) : std::runtime_error(what) {}
};
struct UnderflowNearNode : std::runtime_error {
  explicit UnderflowNearNode(const std::string& what) : std::runtime_error(what) {}
};

struct SeriesConfig {
  double term_tol = 1e-14;  // absolute tolerance on series terms
  int max_terms = 500;
};

using Complex = std::complex<double>;

// Power series sum_j (a)_j / (b)_j z^j / j!, terminating exactly when a is a
// nonpositive integer. Accumulates in extended precision.
Complex hyp1f1(Complex a, Complex b, Complex z, const SeriesConfig& cfg = {});

// Ascending series of the Bessel function of the first kind, integer order.
double bessel_j(int nu, double x, const SeriesConfig& cfg = {});

enum class ProfileKind { Bound, Scattering, ZeroEnergy };

class RadialProfile {
 public:
  // |l| <= n-1, n >= 1
  static RadialProfile bound(int n, int l, double coupling);
  static RadialProfile scattering(double energy, int l, double coupling);
  static RadialProfile zero_energy(int l, double coupling);

  ProfileKind kind() const { return kind_; }
  int level() const { return n_; }
  int angular() const { return l_; }
  double coupling() const { return k_; }
  double energy() const { return energy_; }

  // Value / first / second radial derivative at r > 0.
  Complex eval(double r, int deriv = 0, const SeriesConfig& cfg = {}) const;

  // |(H_l R)(r) - E R(r)| / |R(r)|; throws UnderflowNearNode when |R(r)| is
  // below the floor (caller should resample away from the node).
  double residual(double r, const SeriesConfig& cfg = {},
                  double floor = 1e-12) const;

 private:
  RadialProfile() = default;

  ProfileKind kind_ = ProfileKind::Bound;
  int n_ = 0;  // principal index for bound profiles
  int l_ = 0;
  double k_ = 1.0;
  double energy_ = 0.0;
  // cached series parameters for the confluent profiles
  Complex a_, b_;
  Complex lambda_;  // z = lambda * r
  Complex gamma_;   // exponential rate in the prefactor
  double cscale_ = 0.0;  // prefactor (cscale * r)^|l|
};

// Exact bound energy -k^2/(2(n-1/2)^2) = -2k^2/(2n-1)^2, n >= 1.
Rational bound_energy(int n, const Rational& k);

}  // namespace hcfam
