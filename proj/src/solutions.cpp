#include "hcfam/solutions.hpp"

#include <cmath>

namespace hcfam {

namespace {

using ComplexL = std::complex<long double>;

bool is_nonpositive_integer(const Complex& z) {
  if (z.imag() != 0.0) return false;
  double r = z.real();
  return r <= 0.0 && r == std::floor(r);
}

}  // namespace

Complex hyp1f1(Complex a, Complex b, Complex z, const SeriesConfig& cfg) {
  if (is_nonpositive_integer(b))
    throw PoleAtB("hyp1f1: second parameter is a nonpositive integer");

  const bool terminating = is_nonpositive_integer(a);
  const long terminate_after = terminating ? static_cast<long>(-a.real()) : -1;

  ComplexL term(1.0L, 0.0L);
  ComplexL sum = term;
  ComplexL al(a.real(), a.imag()), bl(b.real(), b.imag()), zl(z.real(), z.imag());
  long double prev_mag = 1e300L;

  for (int j = 0; j < cfg.max_terms; ++j) {
    if (terminating && j >= terminate_after)
      return Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
    ComplexL jl(static_cast<long double>(j), 0.0L);
    term *= (al + jl) * zl / ((bl + jl) * (jl + ComplexL(1.0L, 0.0L)));
    sum += term;
    long double mag = std::abs(term);
    if (mag < cfg.term_tol && prev_mag < cfg.term_tol)
      return Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
    prev_mag = mag;
  }
  throw NoConvergence("hyp1f1: term budget exhausted");
}

double bessel_j(int nu, double x, const SeriesConfig& cfg) {
  if (nu < 0) throw std::invalid_argument("bessel_j: order must be nonnegative");
  if (x < 0) throw std::invalid_argument("bessel_j: argument must be nonnegative");
  long double half_x = x / 2.0L;
  long double term = 1.0L;
  for (int i = 1; i <= nu; ++i) term *= half_x / i;  // (x/2)^nu / nu!
  long double sum = term;
  long double quarter_sq = half_x * half_x;
  long double prev_mag = 1e300L;
  for (int j = 0; j < cfg.max_terms; ++j) {
    term *= -quarter_sq / ((j + 1.0L) * (j + 1.0L + nu));
    sum += term;
    long double mag = std::fabs(term);
    if (mag < cfg.term_tol && prev_mag < cfg.term_tol)
      return static_cast<double>(sum);
    prev_mag = mag;
  }
  throw NoConvergence("bessel_j: term budget exhausted");
}

RadialProfile RadialProfile::bound(int n, int l, double coupling) {
  if (n < 1) throw std::invalid_argument("bound profile: n must be >= 1");
  if (std::abs(l) > n - 1)
    throw std::invalid_argument("bound profile: |l| <= n-1 required");
  if (coupling <= 0) throw std::invalid_argument("coupling must be positive");
  RadialProfile p;
  p.kind_ = ProfileKind::Bound;
  p.n_ = n;
  p.l_ = l;
  p.k_ = coupling;
  double beta = 2.0 * coupling / (n - 0.5);
  p.energy_ = -coupling * coupling / (2.0 * (n - 0.5) * (n - 0.5));
  p.a_ = Complex(static_cast<double>(-n + std::abs(l) + 1), 0.0);
  p.b_ = Complex(static_cast<double>(2 * std::abs(l) + 1), 0.0);
  p.lambda_ = Complex(beta, 0.0);
  p.gamma_ = Complex(-beta / 2.0, 0.0);
  p.cscale_ = beta;
  return p;
}

RadialProfile RadialProfile::scattering(double energy, int l, double coupling) {
  if (energy <= 0) throw std::invalid_argument("scattering profile: energy must be > 0");
  if (coupling <= 0) throw std::invalid_argument("coupling must be positive");
  RadialProfile p;
  p.kind_ = ProfileKind::Scattering;
  p.l_ = l;
  p.k_ = coupling;
  p.energy_ = energy;
  double mom = std::sqrt(2.0 * energy);
  p.a_ = Complex(std::abs(l) + 0.5, coupling / mom);
  p.b_ = Complex(static_cast<double>(2 * std::abs(l) + 1), 0.0);
  p.lambda_ = Complex(0.0, 2.0 * mom);
  p.gamma_ = Complex(0.0, -mom);
  p.cscale_ = 2.0 * mom;
  return p;
}

RadialProfile RadialProfile::zero_energy(int l, double coupling) {
  if (coupling <= 0) throw std::invalid_argument("coupling must be positive");
  RadialProfile p;
  p.kind_ = ProfileKind::ZeroEnergy;
  p.l_ = l;
  p.k_ = coupling;
  p.energy_ = 0.0;
  return p;
}

Complex RadialProfile::eval(double r, int deriv, const SeriesConfig& cfg) const {
  if (r <= 0) throw std::invalid_argument("radial profiles are evaluated at r > 0");
  if (deriv < 0 || deriv > 2) throw std::invalid_argument("deriv must be 0, 1 or 2");

  if (kind_ == ProfileKind::ZeroEnergy) {
    int nu = 2 * std::abs(l_);
    double u = std::sqrt(8.0 * k_ * r);
    auto j_signed = [&](int order) {
      double v = bessel_j(std::abs(order), u, cfg);
      return (order < 0 && std::abs(order) % 2 == 1) ? -v : v;
    };
    double j = j_signed(nu);
    if (deriv == 0) return Complex(j, 0.0);
    double jp = 0.5 * (j_signed(nu - 1) - j_signed(nu + 1));
    double du = u / (2.0 * r);
    if (deriv == 1) return Complex(jp * du, 0.0);
    double jpp = 0.25 * (j_signed(nu - 2) - 2.0 * j + j_signed(nu + 2));
    // R'' = J'' u^2/(4 r^2) - J' u/(4 r^2)
    return Complex(jpp * u * u / (4.0 * r * r) - jp * u / (4.0 * r * r), 0.0);
  }

  const int m = std::abs(l_);
  Complex z = lambda_ * r;
  Complex f = hyp1f1(a_, b_, z, cfg);
  Complex pref = std::pow(Complex(cscale_ * r, 0.0), m) * std::exp(gamma_ * r);
  if (deriv == 0) return pref * f;

  Complex fp = a_ / b_ * hyp1f1(a_ + 1.0, b_ + 1.0, z, cfg);
  Complex ap_over_a = Complex(m / r, 0.0) + gamma_;  // A'/A
  if (deriv == 1) return pref * (ap_over_a * f + lambda_ * fp);

  Complex fpp = a_ * (a_ + 1.0) / (b_ * (b_ + 1.0)) * hyp1f1(a_ + 2.0, b_ + 2.0, z, cfg);
  Complex app_over_a = Complex(m * (m - 1) / (r * r), 0.0) +
                       gamma_ * (2.0 * m / r) + gamma_ * gamma_;  // A''/A
  return pref * (app_over_a * f + 2.0 * ap_over_a * lambda_ * fp +
                 lambda_ * lambda_ * fpp);
}

double RadialProfile::residual(double r, const SeriesConfig& cfg, double floor) const {
  Complex v0 = eval(r, 0, cfg);
  if (std::abs(v0) < floor)
    throw UnderflowNearNode("radial value below underflow floor at r=" +
                            std::to_string(r));
  Complex v1 = eval(r, 1, cfg);
  Complex v2 = eval(r, 2, cfg);
  double ll = static_cast<double>(l_) * l_;
  Complex lhs = -0.5 * (v2 + v1 / r - ll * v0 / (r * r)) - k_ * v0 / r;
  Complex resid = lhs - energy_ * v0;
  return std::abs(resid) / std::abs(v0);
}

Rational bound_energy(int n, const Rational& k) {
  if (n < 1) throw std::invalid_argument("bound_energy: n must be >= 1");
  return -(k * k * Rational(2)) / Rational(2 * n - 1).pow(2);
}

}  // namespace hcfam
