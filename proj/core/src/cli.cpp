#include "nprox/cli.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nprox/analysis.hpp"
#include "nprox/experiments.hpp"
#include "nprox/json_io.hpp"
#include "nprox/measure.hpp"
#include "nprox/points.hpp"
#include "nprox/zoo.hpp"

namespace nprox {

using json = nlohmann::json;

namespace {

struct Outcome {
  std::string csv;
  json meta;
  bool ok = true;
  std::string why;
};

void fail(Outcome& o, const std::string& why) {
  o.ok = false;
  o.why += (o.why.empty() ? "" : "; ") + why;
}

std::vector<cplx> sequence_from_config(const json& cfg) {
  const auto family = cfg.value("family", std::string("leja"));
  const auto count = cfg.value("count", std::size_t{16});
  if (family == "leja_greedy") {
    return leja_greedy_oracle(circle_grid(cfg.value("sample", std::size_t{100000})), count).scalars();
  }
  if (family == "leja" && cfg.value("exact_power", false)) return leja_disk(count).scalars();
  return family_nodes(family, count, cfg.value("order", std::string("leja")));
}

Outcome run_points(const json& cfg) {
  Outcome o;
  const auto pts = sequence_from_config(cfg);
  std::ostringstream os;
  os << "index,re,im\n";
  for (std::size_t i = 0; i < pts.size(); ++i) os << i << ',' << format_double(pts[i].real()) << ',' << format_double(pts[i].imag()) << '\n';
  o.csv = os.str();
  o.meta = {{"family", cfg.value("family", std::string("leja"))}, {"count", pts.size()}};
  if (cfg.value("family", std::string("leja")) == "leja") {
    // Each recursive point must maximize the distance product over a fine circle grid.
    const auto grid = circle_grid(cfg.value("sample", std::size_t{100000}));
    double worst = 0.0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      const std::vector<cplx> prev(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(k));
      double best = -INFINITY;
      for (const auto& z : grid) best = std::max(best, log_distance_product(z, prev));
      const double mine = log_distance_product(pts[k], prev);
      worst = std::max(worst, std::abs(std::expm1(best - mine)));
    }
    o.meta["oracle_max_relative_gap"] = worst;
    if (worst > 1e-6) fail(o, "recursive Leja point is not a grid maximizer");
  }
  return o;
}

Outcome run_ortho(const json& cfg) {
  Outcome o;
  const auto m = measure_from_json(cfg.at("measure"));
  const int d = cfg.at("degree").get<int>();
  const auto basis = gram_schmidt_basis(m, d);
  const double res = gram_residual(basis);
  std::vector<Point> grid;
  if (m->nvars == 1) {
    const auto model = m->domain == "circle" ? CompactModel::disk() : CompactModel::interval();
    grid = sup_set_sample(model, cfg.value("grid", std::size_t{1024}));
  } else {
    grid = m->nodes;
  }
  const auto bm = bm_diagnostic(m, grid, d);
  std::ostringstream os;
  os << "d,max_sup\n";
  for (const auto& row : bm.rows) os << row.degree << ',' << format_double(row.max_sup) << '\n';
  o.csv = os.str();
  json bs = json::array();
  for (const auto& b : basis.b) bs.push_back(b);
  o.meta = {{"domain", m->domain}, {"degree", d}, {"gram_residual", res}, {"bm_rate", bm.rate}, {"basis", bs}};
  const double tol = cfg.value("tolerance", 1e-10);
  if (res > tol) fail(o, "Gram residual " + format_double(res) + " exceeds " + format_double(tol));
  if (bm.rate > 1.05) fail(o, "Bernstein-Markov growth rate above 1.05");
  return o;
}

Outcome run_project(const json& cfg) {
  Outcome o;
  const int n = spec_nvars(cfg.at("projector"));
  const auto proj = projector_from_json(cfg.at("projector"), cfg.value("degree", -1));
  const auto f = parse_test_function(cfg.at("function"), n);
  const auto p = proj.apply(f);
  const auto cf = proj.conditions(f);
  const auto cp = proj.conditions(p);
  std::ostringstream os;
  os << "index,level,condition_f,condition_pf,residual\n";
  double worst = 0.0, scale = 0.0;
  std::size_t row = 0;
  for (std::size_t lvl = 0; lvl < proj.levels().size(); ++lvl) {
    for (std::size_t k = 0; k < proj.levels()[lvl].size(); ++k, ++row) {
      const double r = std::abs(cf[row] - cp[row]);
      worst = std::max(worst, r);
      scale = std::max(scale, std::abs(cf[row]));
      os << row << ',' << lvl << ',' << format_double(std::abs(cf[row])) << ',' << format_double(std::abs(cp[row])) << ','
         << format_double(r) << '\n';
    }
  }
  o.csv = os.str();
  o.meta = {{"degree", proj.degree()}, {"nvars", proj.nvars()}, {"polynomial", p}, {"max_condition_residual", worst},
            {"level_conditions", proj.level_conditions()}};
  if (worst > 1e-8 * std::max(1.0, scale)) fail(o, "interpolation conditions not reproduced");
  return o;
}

Outcome run_converge(const json& cfg) {
  Outcome o;
  const auto ec = ExperimentConfig::from_json(cfg);
  const auto rep = convergence_run(ec);
  o.csv = report_csv(rep);
  o.meta = report_json(rep);
  if (rep.reference_rate) {
    const double rel = std::abs(rep.fit.rate - *rep.reference_rate) / *rep.reference_rate;
    o.meta["rate_relative_error"] = rel;
    if (!(rel <= cfg.value("rate_tolerance", 0.1))) fail(o, "fitted rate outside tolerance of 1/rho");
  } else if (rep.fit.used.size() >= 2 && !(rep.fit.slope < 0.0)) {
    fail(o, "errors do not decay");
  }
  return o;
}

Outcome run_cylinder(const json& cfg) {
  Outcome o;
  const auto res = cylinder_run(cfg);
  o.csv = report_csv(res.entire);
  std::ostringstream nodes;
  nodes << "i,j,x,y,t,residual_entire,residual_rational\n";
  for (const auto& n : res.nodes) {
    nodes << n.i << ',' << n.j << ',' << format_double(n.x) << ',' << format_double(n.y) << ',' << format_double(n.t) << ','
          << format_double(n.residual_entire) << ',' << format_double(n.residual_rational) << '\n';
  }
  o.meta = {{"entire", report_json(res.entire)},
            {"rational", report_json(res.rational)},
            {"max_node_residual", res.max_node_residual},
            {"node_count", res.nodes.size()},
            {"rational_csv", report_csv(res.rational)},
            {"nodes_csv", nodes.str()}};
  const auto& recs = res.entire.records;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    if (!(recs[i].sup_error < recs[i - 1].sup_error)) fail(o, "entire-function error not strictly decreasing");
  }
  if (!recs.empty() && !(recs.back().sup_error < 1e-3)) fail(o, "final entire-function error not below 1e-3");
  if (!(res.max_node_residual < 1e-8)) fail(o, "node residual above 1e-8");
  return o;
}

Outcome run_polya(const json& cfg) {
  Outcome o;
  const int dmax = cfg.value("dmax", 40);
  std::vector<double> lambdas = cfg.value("lambdas", std::vector<double>{0.5, 0.8});
  std::ostringstream os;
  os << "lambda,k,log_term_sup,ratio\n";
  json runs = json::array();
  for (double lam : lambdas) {
    const auto rep = polya_run(lam, dmax);
    for (int k = 0; k <= dmax; ++k) {
      os << format_double(lam) << ',' << k << ',' << format_double(rep.log_term_sup[static_cast<std::size_t>(k)]) << ','
         << (k == 0 ? std::string("nan") : format_double(rep.ratios[static_cast<std::size_t>(k - 1)])) << '\n';
    }
    const bool expect = rep.expected_ratio < 1.0;
    runs.push_back({{"lambda", lam},
                    {"raw_ratio", rep.raw_ratio},
                    {"measured_ratio", rep.measured_ratio},
                    {"expected_ratio", rep.expected_ratio},
                    {"verdict", rep.converges ? "converge" : "diverge"}});
    if (rep.converges != expect) fail(o, "verdict at lambda " + format_double(lam) + " disagrees with |e^lambda - 1|");
  }
  o.csv = os.str();
  o.meta = {{"dmax", dmax}, {"runs", runs}};
  if (cfg.value("bisect", true)) {
    const double t = polya_bisect(cfg.value("lo", 0.3), cfg.value("hi", 1.0), dmax);
    o.meta["threshold"] = t;
    o.meta["ln2"] = std::numbers::ln2;
    if (std::abs(t - std::numbers::ln2) > 0.05) fail(o, "bisection threshold farther than 0.05 from ln 2");
  }
  return o;
}

Outcome run_gelfond(const json& cfg) {
  Outcome o;
  const auto omegas = cfg.value("omegas", std::vector<double>{0.5, 1.0, 2.0, 4.0, 8.0});
  std::ostringstream os;
  os << "omega,c\n";
  json vals = json::array();
  for (double w : omegas) {
    const double c = gelfond_constant(w);
    os << format_double(w) << ',' << format_double(c) << '\n';
    vals.push_back({{"omega", w}, {"c", c}});
  }
  o.csv = os.str();
  const double c1 = gelfond_constant(1.0);
  o.meta = {{"values", vals}, {"c1_minus_ln2", c1 - std::numbers::ln2}};
  if (std::abs(c1 - std::numbers::ln2) > 1e-8) fail(o, "c(1) differs from ln 2");
  return o;
}

Outcome run_rho(const json& cfg) {
  Outcome o;
  const auto k = compact_from_json(cfg.at("compact"));
  const auto f = parse_test_function(cfg.at("function"), k.nvars());
  const auto est = rho_estimate(f, k, cfg.value("dmax", 28), cfg.value("measure_nodes", -1), cfg.value("grid", std::size_t{256}));
  std::ostringstream os;
  os << "d,error,root_error\n";
  for (std::size_t i = 0; i < est.degrees.size(); ++i) {
    const int d = est.degrees[i];
    os << d << ',' << format_double(est.errors[i]) << ','
       << format_double(d >= 1 ? std::pow(est.errors[i], 1.0 / d) : std::nan("")) << '\n';
  }
  o.csv = os.str();
  o.meta = {{"rho", format_double(est.rho)},
            {"rho_low", format_double(est.rho_low)},
            {"rho_high", format_double(est.rho_high)},
            {"slope", est.fit.slope},
            {"slope_stderr", est.fit.slope_stderr},
            {"degrees_used", est.fit.used}};
  if (cfg.contains("expected_rho")) {
    const double want = cfg.at("expected_rho").get<double>();
    const double rel = std::abs(est.rho - want) / want;
    o.meta["relative_error"] = rel;
    if (!(rel <= cfg.value("tolerance", 0.1))) fail(o, "rho estimate outside tolerance");
  }
  return o;
}

Outcome run_density(const json& cfg) {
  Outcome o;
  PointSequence pts;
  if (cfg.contains("points")) {
    for (const auto& p : cfg.at("points")) {
      Point z;
      if (p.is_array() && !p.empty() && !p[0].is_number()) {
        for (const auto& c : p) z.push_back(complex_from_json(c));
      } else if (p.is_array()) {
        for (const auto& c : p) z.push_back(cplx(c.get<double>()));
      } else {
        z.push_back(complex_from_json(p));
      }
      pts.points.push_back(std::move(z));
    }
  } else {
    // Arithmetic progression a_d = step * d, d = 0..count-1.
    const double step = cfg.value("step", 1.0);
    const int count = cfg.value("count", 2000);
    for (int d = 0; d < count; ++d) pts.points.push_back({cplx(step * d)});
  }
  const auto norm = norm_from_json(cfg.value("norm", json("linf")));
  const double omega = cfg.value("omega", 1.0);
  const double rmax = cfg.value("rmax", 1000.0);
  const double delta = omega_density(pts, norm, omega, rmax);
  std::ostringstream os;
  os << "omega,rmax,density,gelfond_c\n"
     << format_double(omega) << ',' << format_double(rmax) << ',' << format_double(delta) << ','
     << format_double(gelfond_constant(omega)) << '\n';
  o.csv = os.str();
  o.meta = {{"density", delta}, {"omega", omega}, {"rmax", rmax}, {"points", pts.points.size()}};
  if (cfg.contains("expected_density")) {
    if (std::abs(delta - cfg.at("expected_density").get<double>()) > cfg.value("tolerance", 0.05)) {
      fail(o, "density differs from the expected value");
    }
  }
  return o;
}

}  // namespace

int run_subcommand(const std::string& name, const json& config, const std::filesystem::path& out, bool check,
                   std::ostream& log) {
  Outcome o;
  try {
    if (name == "points") o = run_points(config);
    else if (name == "ortho") o = run_ortho(config);
    else if (name == "project") o = run_project(config);
    else if (name == "converge") o = run_converge(config);
    else if (name == "cylinder") o = run_cylinder(config);
    else if (name == "polya") o = run_polya(config);
    else if (name == "gelfond") o = run_gelfond(config);
    else if (name == "rho") o = run_rho(config);
    else if (name == "density") o = run_density(config);
    else {
      log << "unknown subcommand '" << name << "'\n";
      return kExitError;
    }
    o.meta["subcommand"] = name;
    o.meta["config_hash"] = config_hash(config);
    o.meta["check_passed"] = o.ok;
    write_text_file(out / (name + ".csv"), o.csv);
    write_text_file(out / (name + ".json"), o.meta.dump(2) + "\n");
    if (name == "cylinder") {
      write_text_file(out / "cylinder_rational.csv", o.meta["rational_csv"].get<std::string>());
      write_text_file(out / "cylinder_nodes.csv", o.meta["nodes_csv"].get<std::string>());
    }
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (!o.ok) {
    log << name << ": verification failed: " << o.why << '\n';
    return check ? kExitCheckFailed : kExitOk;
  }
  log << name << ": ok\n";
  return kExitOk;
}

}  // namespace nprox
