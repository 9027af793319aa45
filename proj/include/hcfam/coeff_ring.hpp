#pragma once

// Coefficient ring for differential operators on the punctured plane:
// elements (p + q*r) / (x^2+y^2)^s with p, q bivariate polynomials in x, y
// over Q(i)[k], subject to r^2 = x^2 + y^2. The representation is canonical:
// s is minimal (the numerator pair is not jointly divisible by x^2+y^2), so
// equality is componentwise.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hcfam/polynomial.hpp"
#include "hcfam/rational.hpp"

namespace hcfam {

// Sparse bivariate polynomial in (x, y) with KPoly coefficients.
class Bivar {
 public:
  using Key = std::pair<int, int>;  // (deg_x, deg_y)

  Bivar() = default;

  static Bivar zero() { return {}; }
  static Bivar constant(KPoly c) {
    Bivar b;
    b.set({0, 0}, std::move(c));
    return b;
  }
  static Bivar one() { return constant(KPoly::one()); }
  static Bivar x() { return monomial(1, 0, KPoly::one()); }
  static Bivar y() { return monomial(0, 1, KPoly::one()); }
  static Bivar k() { return constant(KPoly::variable()); }
  static Bivar monomial(int dx, int dy, KPoly c) {
    Bivar b;
    b.set({dx, dy}, std::move(c));
    return b;
  }
  // x^2 + y^2
  static Bivar radius_sq() {
    Bivar b;
    b.set({2, 0}, KPoly::one());
    b.set({0, 2}, KPoly::one());
    return b;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<Key, KPoly>& terms() const { return t_; }
  KPoly coeff(int dx, int dy) const {
    auto it = t_.find({dx, dy});
    return it == t_.end() ? KPoly::zero() : it->second;
  }

  Bivar operator-() const;
  Bivar& operator+=(const Bivar& o);
  Bivar& operator-=(const Bivar& o);
  friend Bivar operator+(Bivar a, const Bivar& b) { return a += b; }
  friend Bivar operator-(Bivar a, const Bivar& b) { return a -= b; }
  friend Bivar operator*(const Bivar& a, const Bivar& b);
  Bivar& operator*=(const Bivar& o) { return *this = *this * o; }
  Bivar scaled(const KPoly& c) const;

  friend bool operator==(const Bivar& a, const Bivar& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Bivar& a, const Bivar& b) { return !(a == b); }

  // Partial derivative, dir 0 = x, 1 = y.
  Bivar deriv(int dir) const;

  // Exact division by x^2+y^2 (monic in x), nullopt when not divisible.
  std::optional<Bivar> divided_by_radius_sq() const;

  // Coefficient of k^d, as a k-constant bivariate polynomial.
  Bivar k_component(int d) const;

  std::string to_string() const;

 private:
  void set(Key key, KPoly c) {
    if (!c.is_zero()) t_[key] = std::move(c);
  }
  void add_to(Key key, const KPoly& c);

  std::map<Key, KPoly> t_;
};

class CoeffFn {
 public:
  CoeffFn() : s_(0) {}
  CoeffFn(Bivar p, Bivar q, int s);

  static CoeffFn zero() { return {}; }
  static CoeffFn one() { return CoeffFn(Bivar::one(), Bivar::zero(), 0); }
  static CoeffFn constant(const Rational& v) {
    return CoeffFn(Bivar::constant(KPoly::constant(GaussianRational(v))), Bivar::zero(), 0);
  }
  static CoeffFn scalar(KPoly c) {
    return CoeffFn(Bivar::constant(std::move(c)), Bivar::zero(), 0);
  }
  static CoeffFn coord_x() { return CoeffFn(Bivar::x(), Bivar::zero(), 0); }
  static CoeffFn coord_y() { return CoeffFn(Bivar::y(), Bivar::zero(), 0); }
  static CoeffFn radial() { return CoeffFn(Bivar::zero(), Bivar::one(), 0); }
  static CoeffFn coupling() { return CoeffFn(Bivar::k(), Bivar::zero(), 0); }
  static CoeffFn inv_radius_sq() { return CoeffFn(Bivar::one(), Bivar::zero(), 1); }

  const Bivar& p() const { return p_; }
  const Bivar& q() const { return q_; }
  int s() const { return s_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  CoeffFn operator-() const;
  friend CoeffFn operator+(const CoeffFn& a, const CoeffFn& b);
  friend CoeffFn operator-(const CoeffFn& a, const CoeffFn& b);
  friend CoeffFn operator*(const CoeffFn& a, const CoeffFn& b);
  CoeffFn& operator+=(const CoeffFn& o) { return *this = *this + o; }
  CoeffFn& operator-=(const CoeffFn& o) { return *this = *this - o; }
  CoeffFn& operator*=(const CoeffFn& o) { return *this = *this * o; }
  CoeffFn scaled(const Rational& v) const;
  CoeffFn scaled_int(long v) const { return scaled(Rational(v)); }

  friend bool operator==(const CoeffFn& a, const CoeffFn& b) {
    return a.s_ == b.s_ && a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const CoeffFn& a, const CoeffFn& b) { return !(a == b); }

  // Exact partial derivative (dir 0 = x, 1 = y), using dr/dx = x*r/(x^2+y^2).
  CoeffFn deriv(int dir) const;

  CoeffFn k_component(int d) const;

  std::string to_string() const;

 private:
  void canonicalize();

  Bivar p_, q_;
  int s_;
};

}  // namespace hcfam
