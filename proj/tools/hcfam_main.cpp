// Command-line front end: exact verification suites, per-fiber filtration
// reports, spectrum classification, intertwiner tables, radial-solution
// residual sweeps and quadric point clouds, with deterministic JSON/CSV
// output.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "hcfam/diffop.hpp"
#include "hcfam/family_pairs.hpp"
#include "hcfam/jantzen.hpp"
#include "hcfam/module_family.hpp"
#include "hcfam/solutions.hpp"

namespace {

using namespace hcfam;

struct GlobalOpts {
  std::string k_str = "1";
  int window = 24;
  int epsilon = +1;
  std::string format = "text";  // text | json | csv
  unsigned seed = 1;
  std::string out_path;
  double series_tol = 1e-14;
  double residual_tol_bound = 1e-8;
  double residual_tol_scatter = 1e-6;

  Rational k;
};

std::string fmt_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Rational parse_rational_or_throw(const std::string& s, const std::string& what) {
  auto r = Rational::parse(s);
  if (!r)
    throw CLI::ValidationError(what, "expected an exact rational like -2/9, got '" + s + "'");
  return *r;
}

void validate(GlobalOpts& g) {
  g.k = parse_rational_or_throw(g.k_str, "--k");
  if (g.k.sign() <= 0) throw CLI::ValidationError("--k", "coupling must be positive");
  if (g.window < 4) throw CLI::ValidationError("--window", "window must be >= 4");
  if (g.epsilon != 1 && g.epsilon != -1)
    throw CLI::ValidationError("--epsilon", "must be +1 or -1");
  if (g.format != "text" && g.format != "json" && g.format != "csv")
    throw CLI::ValidationError("--format", "must be text, json or csv");
  if (g.series_tol <= 0 || g.residual_tol_bound <= 0 || g.residual_tol_scatter <= 0)
    throw CLI::ValidationError("--series-tol", "tolerances must be positive");
}

// Writes to --out or stdout.
void emit(const GlobalOpts& g, const std::string& payload) {
  if (g.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + g.out_path);
  f << payload;
}

// ---- verify ---------------------------------------------------------------

CheckReport randomized_operator_suite(unsigned seed) {
  CheckReport report;
  std::mt19937 rng(seed);
  bool assoc = true, jacobi = true;
  for (int trial = 0; trial < 10; ++trial) {
    DiffOp a = random_diffop(rng, 2);
    DiffOp b = random_diffop(rng, 2);
    DiffOp c = random_diffop(rng, 2);
    if ((a * b) * c != a * (b * c)) assoc = false;
    DiffOp j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
               commutator(c, commutator(a, b));
    if (!j.is_zero()) jacobi = false;
  }
  report.add("randomized composition associativity", assoc);
  report.add("randomized operator jacobi identity", jacobi);
  return report;
}

int cmd_verify(const GlobalOpts& g, const std::string& perturb) {
  CheckReport all;

  all.merge(verify_bracket_table());
  all.merge(verify_centralizer());
  all.merge(verify_casimir_identity(perturb == "casimir" ? Rational(1) : Rational(0)));

  StructureTable real_table = FamilyAlgebra::default_real_table();
  if (perturb == "bracket") real_table[1][2][0] += FamilyPoly::one();
  FamilyAlgebra alg(std::move(real_table), FamilyAlgebra::default_ladder_table());
  all.merge(alg.jacobi_report());
  all.merge(alg.reflection_automorphism_report());
  all.merge(FamilyAlgebra::basis_roundtrip_report());
  all.merge(iso_transport_report(alg, {Rational(-2), Rational(1)}));

  ModuleFamily fam(g.k);
  for (int eps : {+1, -1}) {
    all.merge(fam.omega_scalar_report(g.window, eps));
    all.merge(fam.bracket_consistency_report(g.window, eps));
    all.merge(fam.reflection_equivariance_report(g.window, eps));
    all.merge(fam.ladder_product_report(g.window, eps));
  }

  Intertwiner psi(g.k);
  std::optional<PsiTamper> tamper;
  if (perturb == "psi") tamper = PsiTamper{1, 0, Rational(1)};
  all.merge(psi_consistency_report(psi, std::min(g.window - 1, 20), tamper));
  all.merge(psi_equivariance_report(psi, std::min(g.window - 1, 12)));
  all.merge(form_invariance_report(psi, std::min(g.window, 8),
                                   {Rational(1), Rational(-2), Rational(-2, 9)}));

  all.merge(randomized_operator_suite(g.seed));

  std::ostringstream os;
  if (g.format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["seed"] = g.seed;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : all.results) {
      nlohmann::json item;
      item["name"] = r.identity;
      item["pass"] = r.pass;
      if (!r.detail.empty()) item["detail"] = r.detail;
      arr.push_back(std::move(item));
    }
    j["results"] = std::move(arr);
    j["all_pass"] = all.all_pass();
    os << j.dump(2) << "\n";
  } else {
    for (const auto& r : all.results) {
      os << (r.pass ? "[PASS] " : "[FAIL] ") << r.identity;
      if (!r.pass && !r.detail.empty()) os << "  (" << r.detail << ")";
      os << "\n";
    }
    os << (all.all_pass() ? "all identities verified\n" : "verification FAILED\n");
  }
  emit(g, os.str());
  return all.all_pass() ? 0 : 1;
}

// ---- jantzen --------------------------------------------------------------

int cmd_jantzen(const GlobalOpts& g, const std::string& e_str) {
  if (e_str.empty())
    throw CLI::ValidationError("point", "an energy is required (positional or --point)");
  Rational e = parse_rational_or_throw(e_str, "point");
  Intertwiner psi(g.k);
  JantzenReport report = classify_fiber(e, psi, g.window);
  std::ostringstream os;
  if (g.format == "text") {
    os << "fiber at E = " << e.to_string() << " (k = " << g.k.to_string()
       << ", window " << g.window << ")\n";
    os << "classification: " << to_string(report.classification) << "\n";
    for (const auto& q : report.quotients) {
      os << "quotient order " << q.order << ": "
         << (q.infinite ? "infinite" : std::to_string(q.weights.size()) + "-dimensional")
         << ", weights";
      int shown = 0;
      for (int n : q.weights) {
        os << " " << n;
        if (++shown == 12 && q.weights.size() > 12) {
          os << " ...";
          break;
        }
      }
      os << ", " << to_string(report.definiteness.at(q.order)) << "\n";
    }
  } else {
    os << jantzen_report_to_json(report, /*pretty=*/true) << "\n";
  }
  emit(g, os.str());
  return 0;
}

// ---- spectrum -------------------------------------------------------------

int cmd_spectrum(const GlobalOpts& g, const std::string& lo_str, const std::string& hi_str,
                 int m_max, int sample_count) {
  Rational lo = parse_rational_or_throw(lo_str, "--lo");
  Rational hi = parse_rational_or_throw(hi_str, "--hi");
  if (!(lo < hi)) throw CLI::ValidationError("--lo/--hi", "need lo < hi");
  if (m_max < 0) throw CLI::ValidationError("--m-max", "must be >= 0");
  if (sample_count < 2) throw CLI::ValidationError("--samples", "must be >= 2");

  Intertwiner psi(g.k);
  EnergyInterval window{lo, hi, true, true};
  std::vector<Rational> bound = reducibility_points(g.k, window, m_max);

  std::vector<Rational> samples;
  for (int i = 0; i < sample_count; ++i)
    samples.push_back(lo + (hi - lo) * Rational(i) / Rational(sample_count - 1));

  struct Row {
    Rational e;
    Classification cls;
    int finite_dim;  // 2m+1 for bound states, else 0
  };
  std::vector<Row> rows;
  auto add_row = [&](const Rational& e) {
    for (const auto& r : rows)
      if (r.e == e) return;
    JantzenReport rep = classify_fiber(e, psi, g.window);
    int dim = rep.classification.kind == SpectralKind::BoundState
                  ? 2 * rep.classification.level + 1
                  : 0;
    rows.push_back({e, rep.classification, dim});
  };
  for (const Rational& e : bound) add_row(e);
  for (const Rational& e : samples) add_row(e);
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.e < b.e; });

  std::ostringstream os;
  if (g.format == "csv") {
    os << "e,classification,finite_quotient_dim\n";
    for (const auto& r : rows)
      os << r.e.to_string() << "," << to_string(r.cls) << ","
         << (r.finite_dim > 0 ? std::to_string(r.finite_dim) : "") << "\n";
  } else if (g.format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["k"] = g.k.to_string();
    j["window_lo"] = lo.to_string();
    j["window_hi"] = hi.to_string();
    j["m_max"] = m_max;
    nlohmann::json bound_json = nlohmann::json::array();
    for (const auto& e : bound) bound_json.push_back(e.to_string());
    j["bound_states"] = std::move(bound_json);
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json item;
      item["e"] = r.e.to_string();
      item["classification"] = to_string(r.cls);
      if (r.finite_dim > 0) item["finite_quotient_dim"] = r.finite_dim;
      rows_json.push_back(std::move(item));
    }
    j["samples"] = std::move(rows_json);
    os << j.dump(2) << "\n";
  } else {
    os << "bound states (m <= " << m_max << ") in [" << lo.to_string() << ", "
       << hi.to_string() << "]:";
    for (const auto& e : bound) os << " " << e.to_string();
    os << "\n";
    for (const auto& r : rows)
      os << "  E = " << r.e.to_string() << " -> " << to_string(r.cls) << "\n";
  }
  emit(g, os.str());
  return 0;
}

// ---- intertwiner ----------------------------------------------------------

int cmd_intertwiner(const GlobalOpts& g, int n_max) {
  if (n_max < 0) throw CLI::ValidationError("--n-max", "must be >= 0");
  Intertwiner psi(g.k);
  std::ostringstream os;
  auto roots_of = [&](int n) {
    std::vector<Rational> roots;
    for (int j = 0; j < n; ++j)
      roots.push_back(-(g.k * g.k * Rational(2)) / Rational(2 * j + 1).pow(2));
    return roots;
  };
  if (g.format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["k"] = g.k.to_string();
    nlohmann::json arr = nlohmann::json::array();
    for (int n = 0; n <= n_max; ++n) {
      nlohmann::json item;
      item["n"] = n;
      item["polynomial"] = psi.component(n).to_string("E");
      nlohmann::json roots = nlohmann::json::array();
      for (const auto& r : roots_of(n)) roots.push_back(r.to_string());
      item["roots"] = std::move(roots);
      arr.push_back(std::move(item));
    }
    j["components"] = std::move(arr);
    os << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    os << "n,polynomial,roots\n";
    for (int n = 0; n <= n_max; ++n) {
      os << n << ",\"" << psi.component(n).to_string("E") << "\",\"";
      bool first = true;
      for (const auto& r : roots_of(n)) {
        if (!first) os << ";";
        first = false;
        os << r.to_string();
      }
      os << "\"\n";
    }
  } else {
    for (int n = 0; n <= n_max; ++n) {
      os << "psi_" << n << " = " << psi.component(n).to_string("E");
      auto roots = roots_of(n);
      if (!roots.empty()) {
        os << "   roots:";
        for (const auto& r : roots) os << " " << r.to_string();
      }
      os << "\n";
    }
  }
  emit(g, os.str());
  return 0;
}

// ---- solutions ------------------------------------------------------------

int cmd_solutions(const GlobalOpts& g, const std::string& kind, int n, int l,
                  double energy, double r_min, double r_max, int r_count) {
  if (r_count < 1) throw CLI::ValidationError("--r-count", "must be >= 1");
  if (r_min <= 0 || r_max < r_min)
    throw CLI::ValidationError("--r-min/--r-max", "need 0 < r-min <= r-max");

  SeriesConfig cfg;
  cfg.term_tol = g.series_tol;
  double kd = g.k.to_double();

  RadialProfile profile = RadialProfile::zero_energy(0, kd);
  std::string n_or_e;
  if (kind == "bound") {
    profile = RadialProfile::bound(n, l, kd);  // throws on |l| > n-1
    n_or_e = std::to_string(n);
  } else if (kind == "scattering") {
    if (energy <= 0) throw CLI::ValidationError("--E", "scattering needs E > 0");
    profile = RadialProfile::scattering(energy, l, kd);
    n_or_e = fmt_double(energy);
  } else if (kind == "zero") {
    profile = RadialProfile::zero_energy(l, kd);
    n_or_e = "0";
  } else {
    throw CLI::ValidationError("--kind", "must be bound, scattering or zero");
  }

  std::ostringstream os;
  os << "kind,n_or_E,l,r,value_re,value_im,residual\n";
  for (int i = 0; i < r_count; ++i) {
    double r = r_count == 1 ? r_min : r_min + (r_max - r_min) * i / (r_count - 1);
    Complex v = profile.eval(r, 0, cfg);
    std::string res;
    try {
      res = fmt_double(profile.residual(r, cfg));
    } catch (const UnderflowNearNode&) {
      std::cerr << "warning: value underflow near a node at r=" << fmt_double(r)
                << "; residual omitted\n";
      res = "nan";
    }
    os << kind << "," << n_or_e << "," << l << "," << fmt_double(r) << ","
       << fmt_double(v.real()) << "," << fmt_double(v.imag()) << "," << res << "\n";
  }
  emit(g, os.str());
  return 0;
}

// ---- quadric --------------------------------------------------------------

int cmd_quadric(const GlobalOpts& g, const std::string& x_str, const std::string& level_str,
                int n_angle, int n_axial, double extent) {
  Rational x = parse_rational_or_throw(x_str, "--x");
  Rational level = parse_rational_or_throw(level_str, "--level");
  QuadricGrid grid{n_angle, n_axial, extent};
  QuadricSample sample = quadric_sample(x, level, grid);  // throws on level = 0
  std::ostringstream os;
  if (g.format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["x"] = x.to_string();
    j["level"] = level.to_string();
    j["real_form"] = to_string(classify_real_form(x));
    j["geometry"] = sample.geometry;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : sample.points)
      pts.push_back({fmt_double(p[0]), fmt_double(p[1]), fmt_double(p[2])});
    j["points"] = std::move(pts);
    os << j.dump(2) << "\n";
  } else {
    os << "u,v,w,x_param\n";
    for (const auto& p : sample.points)
      os << fmt_double(p[0]) << "," << fmt_double(p[1]) << "," << fmt_double(p[2])
         << "," << fmt_double(x.to_double()) << "\n";
  }
  emit(g, os.str());
  if (sample.points.empty())
    std::cerr << "warning: empty level set (" << sample.geometry << ")\n";
  else
    std::cerr << "geometry: " << sample.geometry << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hidden-symmetry family engine for the planar Coulomb problem"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--k", g.k_str, "coupling constant, exact rational")->capture_default_str();
  app.add_option("--window", g.window, "weight window half-width")->capture_default_str();
  app.add_option("--epsilon", g.epsilon, "family flag, +1 or -1")->capture_default_str();
  app.add_option("--format", g.format, "output format: text, json or csv")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized property suites")
      ->capture_default_str();
  app.add_option("--out", g.out_path, "write output to file instead of stdout");
  app.add_option("--series-tol", g.series_tol, "series term tolerance")
      ->capture_default_str();
  app.add_option("--residual-tol-bound", g.residual_tol_bound,
                 "bound-profile residual tolerance")
      ->capture_default_str();
  app.add_option("--residual-tol-scatter", g.residual_tol_scatter,
                 "scattering-profile residual tolerance")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run all exact identity suites");
  std::string perturb;
  verify->add_option("--perturb", perturb, "negative control: bracket, casimir or psi")
      ->check(CLI::IsMember({"bracket", "casimir", "psi"}));

  auto* jantzen = app.add_subcommand("jantzen", "filtration report for one fiber");
  std::string point;
  jantzen->add_option("point", point, "energy, exact rational (use -- before a negative value)");
  jantzen->add_option("-e,--energy", point, "energy, exact rational");

  auto* spectrum = app.add_subcommand("spectrum", "bound list + classification sweep");
  std::string lo = "-3", hi = "3";
  int m_max = 10, sample_count = 13;
  spectrum->add_option("--lo", lo, "window lower end")->capture_default_str();
  spectrum->add_option("--hi", hi, "window upper end")->capture_default_str();
  spectrum->add_option("--m-max", m_max, "largest bound index")->capture_default_str();
  spectrum->add_option("--samples", sample_count, "classification sample count")
      ->capture_default_str();

  auto* intertwiner = app.add_subcommand("intertwiner", "component table");
  int n_max = 10;
  intertwiner->add_option("--n-max", n_max, "largest component index")
      ->capture_default_str();

  auto* solutions = app.add_subcommand("solutions", "radial values and residuals");
  std::string kind = "bound";
  int sol_n = 1, sol_l = 0;
  double sol_e = 1.0, r_min = 0.1, r_max = 10.0;
  int r_count = 23;
  solutions->add_option("--kind", kind, "bound, scattering or zero")->capture_default_str();
  solutions->add_option("--n", sol_n, "principal index (bound)")->capture_default_str();
  solutions->add_option("--l", sol_l, "angular index")->capture_default_str();
  solutions->add_option("--E", sol_e, "energy (scattering)")->capture_default_str();
  solutions->add_option("--r-min", r_min, "grid start")->capture_default_str();
  solutions->add_option("--r-max", r_max, "grid end")->capture_default_str();
  solutions->add_option("--r-count", r_count, "grid size")->capture_default_str();

  auto* quadric = app.add_subcommand("quadric", "level-set point cloud CSV");
  std::string qx = "-1", qlevel = "1";
  int n_angle = 32, n_axial = 16;
  double extent = 2.0;
  quadric->add_option("--x", qx, "family parameter, exact rational")->capture_default_str();
  quadric->add_option("--level", qlevel, "level, exact nonzero rational")
      ->capture_default_str();
  quadric->add_option("--n-angle", n_angle, "angular resolution")->capture_default_str();
  quadric->add_option("--n-axial", n_axial, "axial resolution")->capture_default_str();
  quadric->add_option("--extent", extent, "axial sweep extent")->capture_default_str();

  try {
    app.parse(argc, argv);
    validate(g);
    if (verify->parsed()) return cmd_verify(g, perturb);
    if (jantzen->parsed()) return cmd_jantzen(g, point);
    if (spectrum->parsed()) return cmd_spectrum(g, lo, hi, m_max, sample_count);
    if (intertwiner->parsed()) return cmd_intertwiner(g, n_max);
    if (solutions->parsed())
      return cmd_solutions(g, kind, sol_n, sol_l, sol_e, r_min, r_max, r_count);
    if (quadric->parsed()) return cmd_quadric(g, qx, qlevel, n_angle, n_axial, extent);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
