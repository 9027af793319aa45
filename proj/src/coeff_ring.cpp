#include "hcfam/coeff_ring.hpp"

#include <stdexcept>

namespace hcfam {

void Bivar::add_to(Key key, const KPoly& c) {
  if (c.is_zero()) return;
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Bivar Bivar::operator-() const {
  Bivar r;
  for (const auto& [key, c] : t_) r.t_.emplace(key, -c);
  return r;
}

Bivar& Bivar::operator+=(const Bivar& o) {
  for (const auto& [key, c] : o.t_) add_to(key, c);
  return *this;
}

Bivar& Bivar::operator-=(const Bivar& o) {
  for (const auto& [key, c] : o.t_) add_to(key, -c);
  return *this;
}

Bivar operator*(const Bivar& a, const Bivar& b) {
  Bivar r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_)
      r.add_to({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

Bivar Bivar::scaled(const KPoly& c) const {
  Bivar r;
  if (c.is_zero()) return r;
  for (const auto& [key, v] : t_) r.add_to(key, v * c);
  return r;
}

Bivar Bivar::deriv(int dir) const {
  Bivar r;
  for (const auto& [key, c] : t_) {
    int d = dir == 0 ? key.first : key.second;
    if (d == 0) continue;
    Key nk = dir == 0 ? Key{key.first - 1, key.second} : Key{key.first, key.second - 1};
    r.add_to(nk, c * KPoly::constant(GaussianRational(d)));
  }
  return r;
}

std::optional<Bivar> Bivar::divided_by_radius_sq() const {
  // Reduction by the leading-in-x term x^2; remainder then has deg_x <= 1,
  // and a nonzero multiple of x^2+y^2 always has deg_x >= 2.
  Bivar rem = *this;
  Bivar quot;
  while (true) {
    int max_dx = 1;
    for (const auto& [key, c] : rem.t_) max_dx = std::max(max_dx, key.first);
    if (max_dx < 2) break;
    std::vector<std::pair<Key, KPoly>> batch;
    for (const auto& [key, c] : rem.t_)
      if (key.first == max_dx) batch.emplace_back(key, c);
    for (const auto& [key, c] : batch) {
      Key qk{key.first - 2, key.second};
      quot.add_to(qk, c);
      rem.add_to(key, -c);
      rem.add_to({key.first - 2, key.second + 2}, -c);
    }
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

Bivar Bivar::k_component(int d) const {
  Bivar r;
  for (const auto& [key, c] : t_)
    r.add_to(key, KPoly::constant(c.coeff(d)));
  return r;
}

std::string Bivar::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : t_) {
    std::string cs = c.to_string("k");
    if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
    std::string mono;
    if (key.first > 0) mono += "x" + (key.first > 1 ? "^" + std::to_string(key.first) : "");
    if (key.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += "y" + (key.second > 1 ? "^" + std::to_string(key.second) : "");
    }
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else if (cs == "-1") {
      term = "-" + mono;
    } else {
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

CoeffFn::CoeffFn(Bivar p, Bivar q, int s) : p_(std::move(p)), q_(std::move(q)), s_(s) {
  if (s_ < 0) throw std::invalid_argument("CoeffFn: negative denominator power");
  canonicalize();
}

void CoeffFn::canonicalize() {
  if (p_.is_zero() && q_.is_zero()) {
    s_ = 0;
    return;
  }
  while (s_ > 0) {
    auto dp = p_.divided_by_radius_sq();
    if (!dp) break;
    auto dq = q_.divided_by_radius_sq();
    if (!dq) break;
    p_ = std::move(*dp);
    q_ = std::move(*dq);
    --s_;
  }
}

CoeffFn CoeffFn::operator-() const {
  CoeffFn r;
  r.p_ = -p_;
  r.q_ = -q_;
  r.s_ = s_;
  return r;
}

CoeffFn operator+(const CoeffFn& a, const CoeffFn& b) {
  int s = std::max(a.s_, b.s_);
  Bivar rsq = Bivar::radius_sq();
  auto lift = [&](const Bivar& v, int from) {
    Bivar r = v;
    for (int i = from; i < s; ++i) r = r * rsq;
    return r;
  };
  return CoeffFn(lift(a.p_, a.s_) + lift(b.p_, b.s_),
                 lift(a.q_, a.s_) + lift(b.q_, b.s_), s);
}

CoeffFn operator-(const CoeffFn& a, const CoeffFn& b) { return a + (-b); }

CoeffFn operator*(const CoeffFn& a, const CoeffFn& b) {
  // (p1 + q1 r)(p2 + q2 r) = p1 p2 + q1 q2 (x^2+y^2) + (p1 q2 + q1 p2) r
  Bivar p = a.p_ * b.p_ + a.q_ * b.q_ * Bivar::radius_sq();
  Bivar q = a.p_ * b.q_ + a.q_ * b.p_;
  return CoeffFn(std::move(p), std::move(q), a.s_ + b.s_);
}

CoeffFn CoeffFn::scaled(const Rational& v) const {
  KPoly c = KPoly::constant(GaussianRational(v));
  CoeffFn r;
  r.p_ = p_.scaled(c);
  r.q_ = q_.scaled(c);
  r.s_ = r.is_zero() ? 0 : s_;
  return r;
}

CoeffFn CoeffFn::deriv(int dir) const {
  Bivar coord = dir == 0 ? Bivar::x() : Bivar::y();
  Bivar rsq = Bivar::radius_sq();
  KPoly two_s = KPoly::constant(GaussianRational(Rational(2L * s_)));
  Bivar np = p_.deriv(dir) * rsq - coord.scaled(two_s) * p_;
  Bivar nq = q_.deriv(dir) * rsq + coord * q_ - coord.scaled(two_s) * q_;
  return CoeffFn(std::move(np), std::move(nq), s_ + 1);
}

CoeffFn CoeffFn::k_component(int d) const {
  return CoeffFn(p_.k_component(d), q_.k_component(d), s_);
}

std::string CoeffFn::to_string() const {
  if (is_zero()) return "0";
  std::string num;
  if (!p_.is_zero()) num = p_.to_string();
  if (!q_.is_zero()) {
    std::string qs = q_.to_string();
    bool multi = qs.find(' ') != std::string::npos;
    std::string rpart = qs == "1"    ? "r"
                        : qs == "-1" ? "-r"
                        : multi      ? "(" + qs + ")*r"
                                     : qs + "*r";
    if (num.empty()) {
      num = rpart;
    } else if (rpart[0] == '-') {
      num += " - " + rpart.substr(1);
    } else {
      num += " + " + rpart;
    }
  }
  if (s_ == 0) return num;
  if (num.find(' ') != std::string::npos) num = "(" + num + ")";
  std::string den = "(x^2+y^2)";
  if (s_ > 1) den += "^" + std::to_string(s_);
  return num + "/" + den;
}

}  // namespace hcfam
