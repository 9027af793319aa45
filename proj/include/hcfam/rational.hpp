#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals (GMP-backed) and
// Gaussian rationals. Values are immutable in spirit: all operations return
// new values, nothing here holds shared mutable state.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hcfam {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}            // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Parses "p", "-p/q", with arbitrary-size integers. Floats are rejected.
  static std::optional<Rational> parse(const std::string& s) {
    if (s.empty() || s.find_first_not_of("+-/0123456789") != std::string::npos)
      return std::nullopt;
    mpq_class v;
    if (v.set_str(s, 10) != 0) return std::nullopt;
    if (v.get_den() == 0) return std::nullopt;
    v.canonicalize();
    return Rational(v);
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational pow(int e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("Rational: 0^negative");
      return Rational(1) / pow(-e);
    }
    mpq_class r(1), base(v_);
    for (int i = 0; i < e; ++i) r *= base;
    return Rational(r);
  }

  // Exact square root if the value is a perfect square of a rational.
  std::optional<Rational> sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = num(), d = den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(sn, sd));
  }

  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
  }

 private:
  mpq_class v_;
};

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int n) : re_(n) {}   // NOLINT: implicit by design
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n2 = o.re_ * o.re_ + o.im_ * o.im_;
    if (n2.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    GaussianRational c = o.conj();
    *this *= c;
    re_ /= n2;
    im_ /= n2;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string im_part = im_ == Rational(1)    ? "i"
                          : im_ == Rational(-1) ? "-i"
                                                : im_.to_string() + "*i";
    if (re_.is_zero()) return im_part;
    if (im_.sign() > 0) return re_.to_string() + "+" + im_part;
    return re_.to_string() + im_part;  // im_part carries its own '-'
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
  }

 private:
  Rational re_, im_;
};

// (-i)^n for any integer n, used by the reflection action on weight vectors.
inline GaussianRational minus_i_pow(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational(Rational(0), Rational(-1));
    case 2: return GaussianRational(-1);
    default: return GaussianRational::i();
  }
}

}  // namespace hcfam
