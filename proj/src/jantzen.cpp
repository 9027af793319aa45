#include "hcfam/jantzen.hpp"

#include <json.hpp>

#include <algorithm>

namespace hcfam {

Intertwiner::Intertwiner(Rational coupling, PolyQ normalization)
    : k_(std::move(coupling)), psi0_(std::move(normalization)) {
  if (k_.sign() <= 0) throw std::invalid_argument("Intertwiner: coupling must be positive");
  if (psi0_.is_zero()) throw std::invalid_argument("Intertwiner: normalization must be nonzero");
  memo_.push_back(psi0_);
}

PolyQ Intertwiner::factor(int j) const {
  Rational c0 = k_ * k_ * Rational(1, 4);
  Rational c1 = Rational(2 * j - 1).pow(2) * Rational(1, 8);
  return PolyQ{c0, c1};
}

const PolyQ& Intertwiner::component(int n) const {
  size_t a = static_cast<size_t>(n < 0 ? -n : n);
  while (memo_.size() <= a) {
    int j = static_cast<int>(memo_.size());
    memo_.push_back(memo_.back() * factor(j));
  }
  return memo_[a];
}

PolyQ Intertwiner::component_by_recursion(int n) const {
  // Raising chain for n > 0: psi(A+ f_m) = A+ psi(f_m) at m >= 0 gives
  // psi_{m+1} = 1/2 (k^2/2 + E(m+1/2)^2) psi_m. Lowering chain for n < 0:
  // psi(A- f_m) = A- psi(f_m) at m <= 0 gives
  // psi_{m-1} = 1/2 (k^2/2 + E(m-1/2)^2) psi_m.
  PolyQ cur = psi0_;
  if (n >= 0) {
    for (int m = 0; m < n; ++m) {
      Rational c1 = (Rational(2 * m + 1) * Rational(1, 2)).pow(2) * Rational(1, 2);
      cur = cur * PolyQ{k_ * k_ * Rational(1, 4), c1};
    }
  } else {
    for (int m = 0; m > n; --m) {
      Rational c1 = (Rational(2 * m - 1) * Rational(1, 2)).pow(2) * Rational(1, 2);
      cur = cur * PolyQ{k_ * k_ * Rational(1, 4), c1};
    }
  }
  return cur;
}

ModuleVector Intertwiner::apply(const ModuleVector& v) const {
  if (v.side != Side::Primal)
    throw std::invalid_argument("Intertwiner: applies to primal vectors");
  ModuleVector out;
  out.side = Side::Dual;
  out.eps = v.eps;
  out.window = v.window;
  for (const auto& [n, c] : v.entries) {
    PolyG mapped = c * lift_to_gaussian(component(n));
    if (!mapped.is_zero()) out.entries.emplace(n, std::move(mapped));
  }
  return out;
}

CheckReport psi_consistency_report(const Intertwiner& psi, int n_max,
                                   const std::optional<PsiTamper>& tamper) {
  CheckReport report;
  for (int n = 0; n <= n_max; ++n) {
    PolyQ closed = psi.component(n);
    if (tamper && tamper->n == n) {
      std::vector<Rational> cs;
      for (int d = 0; d <= std::max(closed.degree(), tamper->coeff_index); ++d)
        cs.push_back(closed.coeff(d));
      cs[static_cast<size_t>(tamper->coeff_index)] += tamper->delta;
      closed = PolyQ(std::move(cs));
    }
    PolyQ up = psi.component_by_recursion(n);
    PolyQ down = psi.component_by_recursion(-n);
    bool ok = up == closed && down == closed;
    report.add("psi_" + std::to_string(n) + " recursion matches closed form", ok,
               ok ? ""
                  : "closed " + closed.to_string("E") + ", raising " +
                        up.to_string("E") + ", lowering " + down.to_string("E"));
  }
  return report;
}

CheckReport psi_equivariance_report(const Intertwiner& psi, int n_max) {
  CheckReport report;
  ModuleFamily fam(psi.coupling());
  int window = n_max + 1;
  bool ok_plus = true, ok_minus = true;
  std::string d_plus, d_minus;
  for (int n = -n_max; n <= n_max; ++n) {
    ModuleVector fn = fam.basis(Side::Primal, n, +1, window);
    ModuleVector lhs_p = psi.apply(fam.act(GeneratorAction::APlus, fn));
    ModuleVector rhs_p = fam.act(GeneratorAction::APlus, psi.apply(fn));
    if (ok_plus && !(lhs_p == rhs_p)) {
      ok_plus = false;
      d_plus = "weight " + std::to_string(n);
    }
    ModuleVector lhs_m = psi.apply(fam.act(GeneratorAction::AMinus, fn));
    ModuleVector rhs_m = fam.act(GeneratorAction::AMinus, psi.apply(fn));
    if (ok_minus && !(lhs_m == rhs_m)) {
      ok_minus = false;
      d_minus = "weight " + std::to_string(n);
    }
  }
  report.add("psi(A+ f) = A+ psi(f)", ok_plus, d_plus);
  report.add("psi(A- f) = A- psi(f)", ok_minus, d_minus);
  return report;
}

namespace {

// Exact (E-e)^{-times} division; order must be >= times.
PolyQ divide_out(PolyQ p, const Rational& e, int times) {
  for (int i = 0; i < times; ++i) {
    auto [q, rem] = p.divide_linear(e);
    if (!rem.is_zero())
      throw DivisionByLowerOrder("component order below the requested layer");
    p = std::move(q);
  }
  return p;
}

}  // namespace

JantzenReport jantzen_filtration(const GaussianRational& e, const Intertwiner& psi,
                                 int window) {
  if (window < 1) throw std::invalid_argument("jantzen_filtration: window must be >= 1");
  JantzenReport report;
  report.point = e;
  report.real_point = e.is_real();
  report.k = psi.coupling();
  report.window = window;

  std::map<int, std::vector<int>> by_order;
  for (int n = -window; n <= window; ++n) {
    PolyG comp = lift_to_gaussian(psi.component(n));
    int order = vanishing_order(comp, e).value();
    report.layer_orders[n] = order;
    by_order[order].push_back(n);
  }
  // Vanishing orders are nondecreasing in |n| and each ladder factor has a
  // single root, so the top-order group is the one that continues past any
  // window.
  int max_order = by_order.rbegin()->first;
  for (auto& [order, weights] : by_order) {
    QuotientLayer layer;
    layer.order = order;
    std::sort(weights.begin(), weights.end());
    layer.weights = weights;
    layer.infinite = order == max_order;
    report.quotients.push_back(std::move(layer));
  }
  return report;
}

Rational hermitian_form(const Rational& e, int layer, int s_weight, int t_weight,
                        const Intertwiner& psi) {
  if (s_weight != t_weight) return Rational(0);
  return divide_out(psi.component(s_weight), e, layer).eval(e);
}

GaussianRational form_value(const Rational& e, int layer, const ModuleVector& v,
                            const ModuleVector& w, const Intertwiner& psi) {
  if (v.side != Side::Primal || w.side != Side::Primal)
    throw std::invalid_argument("form_value: expects primal vectors");
  PolyG acc;
  for (const auto& [n, vn] : v.entries) {
    auto it = w.entries.find(n);
    if (it == w.entries.end()) continue;
    acc += vn * conj(it->second) * lift_to_gaussian(psi.component(n));
  }
  GaussianRational point(e);
  for (int i = 0; i < layer; ++i) {
    auto [q, rem] = acc.divide_linear(point);
    if (!rem.is_zero())
      throw DivisionByLowerOrder("pairing order below the requested layer");
    acc = std::move(q);
  }
  return acc.eval(point);
}

JantzenReport classify_fiber(const Rational& e, const Intertwiner& psi, int window) {
  JantzenReport report = jantzen_filtration(GaussianRational(e), psi, window);

  if (e.sign() > 0) {
    report.classification = {SpectralKind::ScatteringContinuum, -1};
  } else if (e.is_zero()) {
    report.classification = {SpectralKind::ZeroEnergy, -1};
  } else if (auto m = bound_state_index(e, psi.coupling())) {
    if (window < *m + 2)
      throw std::invalid_argument(
          "classify_fiber: window too small for bound-state level " +
          std::to_string(*m) + "; need window >= " + std::to_string(*m + 2));
    report.classification = {SpectralKind::BoundState, *m};
  } else {
    report.classification = {SpectralKind::NotInSpectrum, -1};
  }

  for (const QuotientLayer& layer : report.quotients) {
    bool has_pos = false, has_neg = false, has_zero = false;
    for (int n : layer.weights) {
      Rational val = divide_out(psi.component(n), e, layer.order).eval(e);
      report.form_diagonal[{layer.order, n}] = val;
      if (val.sign() > 0) has_pos = true;
      else if (val.sign() < 0) has_neg = true;
      else has_zero = true;
    }
    // An infinite quotient at e < 0 always mixes signs: beyond the index
    // where k^2/2 + e (j-1/2)^2 turns negative, consecutive diagonal entries
    // alternate. Label it exactly rather than by window enumeration, so the
    // label does not depend on the window reaching the first flip.
    if (layer.infinite && e.sign() < 0) {
      has_pos = true;
      has_neg = true;
    }
    Definiteness label;
    if (has_zero) label = Definiteness::Zero;
    else if (has_pos && has_neg) label = Definiteness::Indefinite;
    else if (has_pos) label = Definiteness::PositiveDefinite;
    else label = Definiteness::NegativeDefinite;
    report.definiteness[layer.order] = label;
  }
  return report;
}

std::vector<Rational> reducibility_points(const Rational& k, const EnergyInterval& window,
                                          int m_max) {
  std::vector<Rational> out;
  for (int m = 0; m <= m_max; ++m) {
    Rational e = -(k * k * Rational(2)) / Rational(2 * m + 1).pow(2);
    if (window.contains(e)) out.push_back(e);
  }
  return out;
}

std::optional<int> bound_state_index(const Rational& e, const Rational& k) {
  if (e.sign() >= 0) return std::nullopt;
  // e = -2k^2/(2m+1)^2  <=>  -2k^2/e = (2m+1)^2
  Rational target = -(k * k * Rational(2)) / e;
  auto root = target.sqrt_exact();
  if (!root) return std::nullopt;
  if (root->den() != 1) return std::nullopt;
  mpz_class t = root->num();
  if (mpz_even_p(t.get_mpz_t())) return std::nullopt;
  mpz_class m = (t - 1) / 2;
  if (!m.fits_sint_p()) return std::nullopt;
  return static_cast<int>(m.get_si());
}

CheckReport form_invariance_report(const Intertwiner& psi, int window,
                                   const std::vector<Rational>& points) {
  CheckReport report;
  ModuleFamily fam(psi.coupling());

  // sigma on the ladder basis, from sigma(T) = -T^*: J = iL picks up the
  // conjugated i, so sigma(J) = -J and sigma(A+-) = A-+.
  auto sigma_act = [&](GeneratorAction g, const ModuleVector& v) {
    switch (g) {
      case GeneratorAction::J: {
        ModuleVector out = fam.act(GeneratorAction::J, v);
        for (auto& [n, c] : out.entries) c = -c;
        return out;
      }
      case GeneratorAction::APlus:
        return fam.act(GeneratorAction::AMinus, v);
      case GeneratorAction::AMinus:
        return fam.act(GeneratorAction::APlus, v);
      default:
        throw std::logic_error("sigma_act: unsupported generator");
    }
  };

  auto pairing = [&](const ModuleVector& v, const ModuleVector& w) {
    PolyG acc;
    for (const auto& [n, vn] : v.entries) {
      auto it = w.entries.find(n);
      if (it == w.entries.end()) continue;
      acc += vn * conj(it->second) * lift_to_gaussian(psi.component(n));
    }
    return acc;
  };

  const GeneratorAction gens[] = {GeneratorAction::J, GeneratorAction::APlus,
                                  GeneratorAction::AMinus};
  const char* names[] = {"J", "A+", "A-"};

  // Identity level: <X f_s, f_t> + <f_s, sigma(X) f_t> = 0 in Q(i)[E].
  for (int gi = 0; gi < 3; ++gi) {
    bool ok = true;
    std::string detail;
    for (int s = -(window - 1); s <= window - 1 && ok; ++s)
      for (int t = -(window - 1); t <= window - 1 && ok; ++t) {
        ModuleVector fs = fam.basis(Side::Primal, s, +1, window);
        ModuleVector ft = fam.basis(Side::Primal, t, +1, window);
        PolyG total = pairing(fam.act(gens[gi], fs), ft) +
                      pairing(fs, sigma_act(gens[gi], ft));
        if (!total.is_zero()) {
          ok = false;
          detail = "s=" + std::to_string(s) + " t=" + std::to_string(t) + ": " +
                   total.to_string("E");
        }
      }
    report.add(std::string("<") + names[gi] + " f,f'> + <f,sigma(" + names[gi] +
                   ")f'> = 0 (identity in E)",
               ok, detail);
  }

  // Evaluated on the quotient forms at the sample points.
  for (const Rational& e : points) {
    JantzenReport rep = classify_fiber(e, psi, window);
    bool ok = true;
    std::string detail;
    for (const QuotientLayer& layer : rep.quotients) {
      for (int gi = 0; gi < 3 && ok; ++gi)
        for (int s : layer.weights) {
          if (s <= -window || s >= window) continue;
          for (int t : layer.weights) {
            if (t <= -window || t >= window) continue;
            ModuleVector fs = fam.basis(Side::Primal, s, +1, window);
            ModuleVector ft = fam.basis(Side::Primal, t, +1, window);
            GaussianRational total =
                form_value(e, layer.order, fam.act(gens[gi], fs), ft, psi) +
                form_value(e, layer.order, fs, sigma_act(gens[gi], ft), psi);
            if (!total.is_zero()) {
              ok = false;
              detail = "layer " + std::to_string(layer.order) + " X=" + names[gi] +
                       " s=" + std::to_string(s) + " t=" + std::to_string(t);
              break;
            }
          }
          if (!ok) break;
        }
    }
    report.add("form invariance at E=" + e.to_string(), ok, detail);
  }
  return report;
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive_definite";
    case Definiteness::NegativeDefinite: return "negative_definite";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Zero: return "zero";
    case Definiteness::NotApplicable: return "not_applicable";
  }
  return "?";
}

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case SpectralKind::ScatteringContinuum: return "scattering_continuum";
    case SpectralKind::ZeroEnergy: return "zero_energy";
    case SpectralKind::BoundState: return "bound_state(" + std::to_string(c.level) + ")";
    case SpectralKind::NotInSpectrum: return "not_in_spectrum";
  }
  return "?";
}

std::string jantzen_report_to_json(const JantzenReport& report, bool pretty) {
  nlohmann::json j;
  j["schema"] = 1;
  j["point"] = report.point.re().to_string();
  if (!report.real_point) j["point_im"] = report.point.im().to_string();
  j["k"] = report.k.to_string();
  j["window"] = report.window;

  nlohmann::json layers = nlohmann::json::array();
  for (const QuotientLayer& q : report.quotients) {
    nlohmann::json item;
    item["order"] = q.order;
    item["weights"] = q.weights;
    if (q.infinite)
      item["dim"] = "infinite";
    else
      item["dim"] = q.weights.size();
    layers.push_back(std::move(item));
  }
  j["layers"] = std::move(layers);

  nlohmann::json form = nlohmann::json::array();
  for (const auto& [key, value] : report.form_diagonal) {
    nlohmann::json item;
    item["layer"] = key.first;
    item["weight"] = key.second;
    item["value"] = value.to_string();
    form.push_back(std::move(item));
  }
  j["form"] = std::move(form);

  nlohmann::json defs;
  if (!report.real_point) {
    for (const QuotientLayer& q : report.quotients)
      defs[std::to_string(q.order)] = to_string(Definiteness::NotApplicable);
  } else {
    for (const auto& [order, label] : report.definiteness)
      defs[std::to_string(order)] = to_string(label);
  }
  j["definiteness"] = std::move(defs);

  nlohmann::json cls;
  switch (report.classification.kind) {
    case SpectralKind::ScatteringContinuum: cls["kind"] = "scattering_continuum"; break;
    case SpectralKind::ZeroEnergy: cls["kind"] = "zero_energy"; break;
    case SpectralKind::BoundState:
      cls["kind"] = "bound_state";
      cls["level"] = report.classification.level;
      break;
    case SpectralKind::NotInSpectrum: cls["kind"] = "not_in_spectrum"; break;
  }
  j["classification"] = std::move(cls);

  return pretty ? j.dump(2) : j.dump();
}

}  // namespace hcfam
