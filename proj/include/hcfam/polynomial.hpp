#pragma once

// Dense univariate polynomials over an exact coefficient ring. This is the
// workhorse for the energy indeterminate (coefficients Rational or
// GaussianRational) and, nested, for the coupling indeterminate k.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hcfam/rational.hpp"

namespace hcfam {

template <typename T>
class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial: empty coefficient vector
  Polynomial(std::initializer_list<T> ascending) : c_(ascending) { prune(); }
  explicit Polynomial(std::vector<T> ascending) : c_(std::move(ascending)) { prune(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(T v) {
    Polynomial p;
    if (!(v == T(0))) p.c_.push_back(std::move(v));
    return p;
  }
  static Polynomial one() { return constant(T(1)); }
  static Polynomial variable() { return monomial(1, T(1)); }
  static Polynomial monomial(int deg, T coeff) {
    Polynomial p;
    if (coeff == T(0)) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, T(0));
    p.c_.back() = std::move(coeff);
    return p;
  }
  // (x - root), handy for building vanishing factors.
  static Polynomial linear_root(const T& root) {
    return Polynomial{T(0) - root, T(1)};
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is the sentinel -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  T coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return T(0);
    return c_[static_cast<size_t>(i)];
  }
  const std::vector<T>& coeffs() const { return c_; }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& x : r.c_) x = T(0) - x;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    prune();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    prune();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    prune();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial pow(int e) const {
    Polynomial r = one();
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // Horner evaluation; S must be constructible from T (e.g. a Rational
  // polynomial evaluated at a GaussianRational point).
  template <typename S>
  S eval(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
    return acc;
  }

  template <typename F>
  auto map_coeffs(F f) const -> Polynomial<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    std::vector<U> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(f(x));
    return Polynomial<U>(std::move(r));
  }

  // Synthetic division by (x - root): returns {quotient, remainder}.
  std::pair<Polynomial, T> divide_linear(const T& root) const {
    if (is_zero()) return {Polynomial(), T(0)};
    std::vector<T> q(c_.size() - 1, T(0));
    T carry = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = c_[i] + carry * root;
    }
    return {Polynomial(std::move(q)), carry};
  }

  std::string to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
      T c = coeff(d);
      if (c == T(0)) continue;
      std::string cs = coeff_to_string(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (out.empty()) {
        out += neg ? "-" : "";
      } else {
        out += neg ? " - " : " + ";
      }
      if (neg) cs = cs.substr(1);
      bool needs_parens = cs.find_first_of("+-") != std::string::npos;
      if (needs_parens) cs = "(" + cs + ")";
      if (d == 0) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += var;
        if (d > 1) out += "^" + std::to_string(d);
      }
    }
    return out;
  }

 private:
  static std::string coeff_to_string(const T& c) {
    if constexpr (requires { c.to_string(); }) {
      return c.to_string();
    } else {
      return std::to_string(c);
    }
  }

  void prune() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using PolyQ = Polynomial<Rational>;          // Q[E] and Q[x]
using PolyG = Polynomial<GaussianRational>;  // Q(i)[E], module coefficients
using KPoly = Polynomial<GaussianRational>;  // Q(i)[k], operator scalars

inline PolyG lift_to_gaussian(const PolyQ& p) {
  return p.map_coeffs([](const Rational& r) { return GaussianRational(r); });
}

inline PolyG conj(const PolyG& p) {
  return p.map_coeffs([](const GaussianRational& z) { return z.conj(); });
}

// Largest n with (x - at)^n dividing p; nullopt is the "infinite order"
// sentinel for the zero polynomial.
template <typename T>
std::optional<int> vanishing_order(const Polynomial<T>& p, const T& at) {
  if (p.is_zero()) return std::nullopt;
  int order = 0;
  Polynomial<T> cur = p;
  while (true) {
    auto [q, rem] = cur.divide_linear(at);
    if (!(rem == T(0))) return order;
    ++order;
    cur = std::move(q);
    if (cur.is_zero()) return order;  // unreachable for nonzero p, kept for safety
  }
}

}  // namespace hcfam
