#include "hcfam/module_family.hpp"

#include <sstream>

namespace hcfam {

std::string ModuleVector::to_json() const {
  std::ostringstream os;
  os << "{\"side\":\"" << (side == Side::Primal ? "primal" : "dual")
     << "\",\"eps\":" << eps << ",\"window\":" << window << ",\"entries\":{";
  bool first = true;
  for (const auto& [n, c] : entries) {
    if (!first) os << ",";
    first = false;
    os << "\"" << n << "\":\"" << c.to_string("E") << "\"";
  }
  os << "}}";
  return os.str();
}

ModuleFamily::ModuleFamily(Rational coupling) : k_(std::move(coupling)) {
  if (k_.sign() <= 0)
    throw std::invalid_argument("ModuleFamily: coupling must be positive");
}

ModuleVector ModuleFamily::basis(Side side, int n, int eps, int window) const {
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("ModuleFamily: eps must be +1 or -1");
  if (n < -window || n > window)
    throw std::invalid_argument("ModuleFamily: weight outside window");
  ModuleVector v;
  v.side = side;
  v.eps = eps;
  v.window = window;
  v.entries[n] = PolyG::one();
  return v;
}

PolyG ModuleFamily::ladder_coeff(int n, int offset) const {
  // -1/2 (k^2/2 + E (n + offset/2)^2)
  Rational half(1, 2);
  Rational ksq_half = k_ * k_ * half;
  Rational nn = Rational(2 * n + offset, 2);
  return PolyG{GaussianRational(-half * ksq_half),
               GaussianRational(-half * nn * nn)};
}

PolyG ModuleFamily::omega_scalar() const {
  return PolyG{GaussianRational(-(k_ * k_ * Rational(1, 2))),
               GaussianRational(Rational(-1, 4))};
}

ModuleVector ModuleFamily::shifted_action(const ModuleVector& v, int shift,
                                          bool raising) const {
  ModuleVector out;
  out.side = v.side;
  out.eps = v.eps;
  out.window = v.window;
  const bool dual = v.side == Side::Dual;
  for (const auto& [n, c] : v.entries) {
    int m = n + shift;
    if (m < -v.window || m > v.window)
      throw TruncationOverflow("ladder step leaves the weight window at n=" +
                               std::to_string(n) + "; enlarge the window");
    PolyG factor;
    if (raising) {
      if (!dual)
        factor = n >= 0 ? PolyG::one() : ladder_coeff(n, +1);
      else
        factor = n >= 0 ? -ladder_coeff(n, +1) : -PolyG::one();
    } else {
      if (!dual)
        factor = n > 0 ? ladder_coeff(n, -1) : PolyG::one();
      else
        factor = n > 0 ? -PolyG::one() : -ladder_coeff(n, -1);
    }
    PolyG add = c * factor;
    auto it = out.entries.find(m);
    if (it == out.entries.end()) {
      if (!add.is_zero()) out.entries.emplace(m, std::move(add));
    } else {
      it->second += add;
      if (it->second.is_zero()) out.entries.erase(it);
    }
  }
  return out;
}

ModuleVector ModuleFamily::act(GeneratorAction g, const ModuleVector& v) const {
  switch (g) {
    case GeneratorAction::J: {
      ModuleVector out = v;
      for (auto& [n, c] : out.entries) c *= GaussianRational(n);
      out.prune();
      return out;
    }
    case GeneratorAction::APlus:
      return shifted_action(v, +1, /*raising=*/true);
    case GeneratorAction::AMinus:
      return shifted_action(v, -1, /*raising=*/false);
    case GeneratorAction::Omega: {
      // E J^2 + E J + 2 A- A+
      PolyG E = PolyG::variable();
      ModuleVector jv = act(GeneratorAction::J, v);
      ModuleVector jjv = act(GeneratorAction::J, jv);
      ModuleVector ladder =
          act(GeneratorAction::AMinus, act(GeneratorAction::APlus, v));
      ModuleVector out;
      out.side = v.side;
      out.eps = v.eps;
      out.window = v.window;
      auto add = [&out](int n, const PolyG& c) {
        auto it = out.entries.find(n);
        if (it == out.entries.end()) {
          if (!c.is_zero()) out.entries.emplace(n, c);
        } else {
          it->second += c;
          if (it->second.is_zero()) out.entries.erase(it);
        }
      };
      for (const auto& [n, c] : jjv.entries) add(n, E * c);
      for (const auto& [n, c] : jv.entries) add(n, E * c);
      for (const auto& [n, c] : ladder.entries) add(n, c * GaussianRational(2));
      return out;
    }
    case GeneratorAction::Reflection: {
      ModuleVector out;
      out.side = v.side;
      out.eps = v.eps;
      out.window = v.window;
      for (const auto& [n, c] : v.entries) {
        PolyG mapped = c * (minus_i_pow(n) * GaussianRational(v.eps));
        if (!mapped.is_zero()) out.entries[-n] = std::move(mapped);
      }
      return out;
    }
  }
  throw std::logic_error("ModuleFamily::act: unknown generator");
}

CheckReport ModuleFamily::omega_scalar_report(int window, int eps) const {
  CheckReport report;
  PolyG omega = omega_scalar();
  for (Side side : {Side::Primal, Side::Dual}) {
    const char* side_name = side == Side::Primal ? "primal" : "dual";
    bool ok = true;
    std::string detail;
    for (int n = -(window - 1); n <= window - 1 && ok; ++n) {
      ModuleVector fn = basis(side, n, eps, window);
      ModuleVector lhs = act(GeneratorAction::Omega, fn);
      ModuleVector rhs = fn;
      rhs.entries[n] = omega;
      if (!(lhs == rhs)) {
        ok = false;
        PolyG got = lhs.entries.count(n) ? lhs.entries[n] : PolyG::zero();
        detail = "weight " + std::to_string(n) + ": got " + got.to_string("E") +
                 ", want " + omega.to_string("E");
      }
    }
    report.add(std::string("Omega acts by -E/4-k^2/2 (") + side_name + ")", ok, detail);
  }
  return report;
}

CheckReport ModuleFamily::bracket_consistency_report(int window, int eps,
                                                     const Rational& expected_shift) const {
  CheckReport report;
  PolyG E = PolyG::variable();
  for (Side side : {Side::Primal, Side::Dual}) {
    const char* side_name = side == Side::Primal ? "primal" : "dual";
    bool ok_pm = true, ok_jp = true, ok_jm = true;
    std::string d_pm, d_jp, d_jm;
    for (int n = -(window - 1); n <= window - 1; ++n) {
      ModuleVector fn = basis(side, n, eps, window);
      ModuleVector pm = act(GeneratorAction::APlus, act(GeneratorAction::AMinus, fn));
      ModuleVector mp = act(GeneratorAction::AMinus, act(GeneratorAction::APlus, fn));
      // [A+, A-] f_n = A+A- f_n - A-A+ f_n = E n f_n
      PolyG diff = (pm.entries.count(n) ? pm.entries[n] : PolyG::zero()) -
                   (mp.entries.count(n) ? mp.entries[n] : PolyG::zero());
      PolyG want = E * PolyG::constant(GaussianRational(Rational(n) + expected_shift));
      if (ok_pm && diff != want) {
        ok_pm = false;
        d_pm = "weight " + std::to_string(n) + ": got " + diff.to_string("E") +
               ", want " + want.to_string("E");
      }
      ModuleVector japlus = act(GeneratorAction::J, act(GeneratorAction::APlus, fn));
      ModuleVector aplusj = act(GeneratorAction::APlus, act(GeneratorAction::J, fn));
      ModuleVector aplus = act(GeneratorAction::APlus, fn);
      PolyG diff_jp = (japlus.entries.count(n + 1) ? japlus.entries[n + 1] : PolyG::zero()) -
                      (aplusj.entries.count(n + 1) ? aplusj.entries[n + 1] : PolyG::zero());
      PolyG want_jp = aplus.entries.count(n + 1) ? aplus.entries[n + 1] : PolyG::zero();
      if (ok_jp && diff_jp != want_jp) {
        ok_jp = false;
        d_jp = "weight " + std::to_string(n);
      }
      ModuleVector jaminus = act(GeneratorAction::J, act(GeneratorAction::AMinus, fn));
      ModuleVector aminusj = act(GeneratorAction::AMinus, act(GeneratorAction::J, fn));
      ModuleVector aminus = act(GeneratorAction::AMinus, fn);
      PolyG diff_jm = (jaminus.entries.count(n - 1) ? jaminus.entries[n - 1] : PolyG::zero()) -
                      (aminusj.entries.count(n - 1) ? aminusj.entries[n - 1] : PolyG::zero());
      PolyG want_jm = -(aminus.entries.count(n - 1) ? aminus.entries[n - 1] : PolyG::zero());
      if (ok_jm && diff_jm != want_jm) {
        ok_jm = false;
        d_jm = "weight " + std::to_string(n);
      }
    }
    report.add(std::string("[A+,A-] = E J (") + side_name + ")", ok_pm, d_pm);
    report.add(std::string("[J,A+] = A+ (") + side_name + ")", ok_jp, d_jp);
    report.add(std::string("[J,A-] = -A- (") + side_name + ")", ok_jm, d_jm);
  }
  return report;
}

CheckReport ModuleFamily::reflection_equivariance_report(int window, int eps) const {
  CheckReport report;
  GaussianRational i = GaussianRational::i();
  for (Side side : {Side::Primal, Side::Dual}) {
    const char* side_name = side == Side::Primal ? "primal" : "dual";
    bool ok_j = true, ok_p = true, ok_m = true, ok_sq = true;
    std::string d_j, d_p, d_m;
    for (int n = -(window - 1); n <= window - 1; ++n) {
      ModuleVector fn = basis(side, n, eps, window);
      ModuleVector sfn = act(GeneratorAction::Reflection, fn);

      // s(J f_n) = (-J)(s f_n)
      ModuleVector lhs_j = act(GeneratorAction::Reflection, act(GeneratorAction::J, fn));
      ModuleVector rhs_j = act(GeneratorAction::J, sfn);
      for (auto& [m, c] : rhs_j.entries) c = -c;
      rhs_j.prune();
      lhs_j.prune();
      if (ok_j && !(lhs_j == rhs_j)) {
        ok_j = false;
        d_j = "weight " + std::to_string(n);
      }

      // s(A+ f_n) = -i A-(s f_n)
      ModuleVector lhs_p = act(GeneratorAction::Reflection, act(GeneratorAction::APlus, fn));
      ModuleVector rhs_p = act(GeneratorAction::AMinus, sfn);
      for (auto& [m, c] : rhs_p.entries) c *= (-i);
      if (ok_p && !(lhs_p == rhs_p)) {
        ok_p = false;
        d_p = "weight " + std::to_string(n);
      }

      // s(A- f_n) = +i A+(s f_n)
      ModuleVector lhs_m = act(GeneratorAction::Reflection, act(GeneratorAction::AMinus, fn));
      ModuleVector rhs_m = act(GeneratorAction::APlus, sfn);
      for (auto& [m, c] : rhs_m.entries) c *= i;
      if (ok_m && !(lhs_m == rhs_m)) {
        ok_m = false;
        d_m = "weight " + std::to_string(n);
      }

      ModuleVector ssfn = act(GeneratorAction::Reflection, sfn);
      if (!(ssfn == fn)) ok_sq = false;
    }
    report.add(std::string("s(J f) = (s.J)(s f) (") + side_name + ")", ok_j, d_j);
    report.add(std::string("s(A+ f) = -i A-(s f) (") + side_name + ")", ok_p, d_p);
    report.add(std::string("s(A- f) = +i A+(s f) (") + side_name + ")", ok_m, d_m);
    report.add(std::string("s^2 = id (") + side_name + ")", ok_sq);
  }
  return report;
}

CheckReport ModuleFamily::ladder_product_report(int window, int eps) const {
  CheckReport report;
  bool ok_mp = true, ok_pm = true;
  std::string d_mp, d_pm;
  for (int n = -(window - 1); n <= window - 1; ++n) {
    ModuleVector fn = basis(Side::Primal, n, eps, window);
    ModuleVector mp = act(GeneratorAction::AMinus, act(GeneratorAction::APlus, fn));
    ModuleVector want_mp = fn;
    want_mp.entries[n] = ladder_coeff(n, +1);
    want_mp.prune();
    if (ok_mp && !(mp == want_mp)) {
      ok_mp = false;
      d_mp = "weight " + std::to_string(n);
    }
    ModuleVector pm = act(GeneratorAction::APlus, act(GeneratorAction::AMinus, fn));
    ModuleVector want_pm = fn;
    want_pm.entries[n] = ladder_coeff(n, -1);
    want_pm.prune();
    if (ok_pm && !(pm == want_pm)) {
      ok_pm = false;
      d_pm = "weight " + std::to_string(n);
    }
  }
  report.add("A-A+ f_n = -1/2(k^2/2+E(n+1/2)^2) f_n", ok_mp, d_mp);
  report.add("A+A- f_n = -1/2(k^2/2+E(n-1/2)^2) f_n", ok_pm, d_pm);
  return report;
}

std::map<int, GaussianRational> fiber_evaluate(const ModuleVector& v,
                                               const GaussianRational& e) {
  std::map<int, GaussianRational> out;
  for (const auto& [n, c] : v.entries) {
    GaussianRational val = c.eval(e);
    if (!val.is_zero()) out[n] = val;
  }
  return out;
}

}  // namespace hcfam
