#include "nprox/experiments.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nprox/errors.hpp"
#include "nprox/divided_difference.hpp"
#include "nprox/json_io.hpp"
#include "nprox/points.hpp"
#include "nprox/projector.hpp"
#include "nprox/zoo.hpp"

namespace nprox {

using json = nlohmann::json;

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig c;
  c.raw = j;
  c.projector = j.at("projector");
  c.function = j.at("function");
  c.compact = compact_from_json(j.at("compact"));
  c.grid = j.value("grid", std::size_t{64});
  c.degrees = j.value("degrees", std::vector<int>{});
  c.seed = j.value("seed", std::uint64_t{0});
  c.record_timing = j.value("record_timing", false);
  if (j.contains("reference_rho")) c.reference_rho = j.at("reference_rho").get<double>();
  if (c.grid < 64) throw std::invalid_argument("grid resolution must be at least 64 per dimension");
  for (std::size_t i = 1; i < c.degrees.size(); ++i) {
    if (c.degrees[i] <= c.degrees[i - 1]) throw std::invalid_argument("degrees must be strictly increasing");
  }
  if (spec_nvars(c.projector) != c.compact.nvars()) throw DimensionMismatch("projector and compact differ in dimension");
  return c;
}

namespace {

double root_of(double e, int d) { return d >= 1 ? std::pow(e, 1.0 / d) : std::numeric_limits<double>::quiet_NaN(); }

RateFit fit_records(const std::vector<DegreeRecord>& recs, double floor) {
  std::vector<int> ds;
  std::vector<double> es;
  for (const auto& r : recs) {
    ds.push_back(r.d);
    es.push_back(r.sup_error);
  }
  return fit_geometric_rate(ds, es, floor);
}

json base_metadata(const std::string& name, const json& cfg) {
  return json{{"experiment", name}, {"config_hash", config_hash(cfg)}};
}

}  // namespace

ExperimentReport convergence_run(const ExperimentConfig& cfg) {
  const auto f = parse_test_function(cfg.function, cfg.compact.nvars());
  check_poles_on(f, cfg.compact);
  const auto pts = sample(cfg.compact, cfg.grid);
  std::vector<cplx> fv;
  double fnorm = 0.0;
  for (const auto& z : pts) {
    fv.push_back(f(z));
    fnorm = std::max(fnorm, std::abs(fv.back()));
  }

  ExperimentReport rep;
  rep.name = "converge";
  for (int d : cfg.degrees) {
    const auto start = std::chrono::steady_clock::now();
    const auto proj = projector_from_json(cfg.projector, d);
    const Polynomial p = proj.apply(f);
    double e = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) e = std::max(e, std::abs(fv[i] - p(pts[i])));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.records.push_back({d, e, root_of(e, d), cfg.record_timing ? secs : 0.0});
  }
  rep.fit = fit_records(rep.records, 1e-12 * std::max(fnorm, 1e-300));
  if (cfg.reference_rho) rep.reference_rate = 1.0 / *cfg.reference_rho;
  rep.metadata = base_metadata("converge", cfg.raw);
  rep.metadata["grid"] = cfg.grid;
  rep.metadata["seed"] = cfg.seed;
  rep.metadata["compact"] = cfg.compact.name();
  rep.metadata["function"] = f.describe();
  rep.metadata["error_floor"] = 1e-12 * fnorm;
  return rep;
}

namespace {

// Real unit disk in (x, y) times [-1, 1] in t.
std::vector<Point> cylinder_grid(std::size_t m) {
  std::vector<std::array<double, 2>> disk{{0.0, 0.0}};
  const std::size_t rings = std::max<std::size_t>(2, m / 8);
  for (std::size_t j = 1; j <= rings; ++j) {
    const double r = static_cast<double>(j) / static_cast<double>(rings);
    for (std::size_t i = 0; i < m; ++i) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
      disk.push_back({r * std::cos(th), r * std::sin(th)});
    }
  }
  std::vector<Point> out;
  for (const auto& xy : disk) {
    for (std::size_t k = 0; k < m; ++k) {
      const double t = std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(m - 1));
      out.push_back({cplx(xy[0]), cplx(xy[1]), cplx(t)});
    }
  }
  return out;
}

}  // namespace

CylinderResult cylinder_run(const json& cfg) {
  std::vector<int> degrees = cfg.value("degrees", std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10});
  const std::size_t grid = cfg.value("grid", std::size_t{64});
  const bool timing = cfg.value("record_timing", false);
  if (grid < 64) throw std::invalid_argument("grid resolution must be at least 64 per dimension");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 0 || degrees[i] > 12) throw std::invalid_argument("cylinder degrees must lie in 0..12");
    if (i > 0 && degrees[i] <= degrees[i - 1]) throw std::invalid_argument("degrees must be strictly increasing");
  }
  const int dmax = degrees.empty() ? 0 : degrees.back();

  const auto entire = cfg.contains("entire") ? parse_test_function(cfg.at("entire"), 3)
                                             : parse_test_function(json::parse(R"(["exp", ["affine", [1, 1, 1], 0]])"), 3);
  const auto rational =
      cfg.contains("rational")
          ? parse_test_function(cfg.at("rational"), 3)
          : parse_test_function(json::parse(R"(["*", ["recip", ["affine", [1, 1, 0], -3]], ["recip", ["affine", [0, 0, 1], -2]]])"), 3);

  std::size_t m = 2;
  while (m < static_cast<std::size_t>(dmax) + 1) m *= 2;
  const auto a = planar(leja_disk(m)).points;
  const auto b = family_nodes("r_leja", static_cast<std::size_t>(dmax) + 1);

  const auto pts = cylinder_grid(grid);
  std::vector<cplx> ve, vr;
  for (const auto& z : pts) {
    ve.push_back(entire(z));
    vr.push_back(rational(z));
  }

  CylinderResult res;
  res.entire.name = "cylinder_entire";
  res.rational.name = "cylinder_rational";
  for (int d : degrees) {
    const auto start = std::chrono::steady_clock::now();
    const auto proj = newton_product(kergin(a, d), lagrange(b, d));
    const Polynomial pe = proj.apply(entire);
    const Polynomial pr = proj.apply(rational);
    double ee = 0.0, er = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ee = std::max(ee, std::abs(ve[i] - pe(pts[i])));
      er = std::max(er, std::abs(vr[i] - pr(pts[i])));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.entire.records.push_back({d, ee, root_of(ee, d), timing ? secs : 0.0});
    res.rational.records.push_back({d, er, root_of(er, d), timing ? secs : 0.0});

    std::vector<CylinderNode> nodes;
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; i + j <= d; ++j) {
        const Point z{a[static_cast<std::size_t>(i)][0], a[static_cast<std::size_t>(i)][1], b[static_cast<std::size_t>(j)]};
        CylinderNode n{i, j, z[0].real(), z[1].real(), z[2].real(), std::abs(entire(z) - pe(z)), std::abs(rational(z) - pr(z))};
        res.max_node_residual = std::max({res.max_node_residual, n.residual_entire, n.residual_rational});
        nodes.push_back(n);
      }
    }
    if (d == dmax) res.nodes = std::move(nodes);
  }
  res.entire.fit = fit_records(res.entire.records, 1e-13);
  res.rational.fit = fit_records(res.rational.records, 1e-13);
  for (auto* r : {&res.entire, &res.rational}) {
    r->metadata = base_metadata(r->name, cfg);
    r->metadata["grid"] = grid;
    r->metadata["grid_points"] = pts.size();
  }
  res.entire.metadata["function"] = entire.describe();
  res.rational.metadata["function"] = rational.describe();
  return res;
}

PolyaReport polya_run(double lambda, int dmax) {
  if (dmax < 4 || dmax > 60) throw std::invalid_argument("polya_run needs 4 <= dmax <= 60");
  PolyaReport rep;
  rep.lambda = lambda;
  rep.dmax = dmax;
  rep.expected_ratio = std::abs(std::exp(lambda) - 1.0);

  // f[0..k] of exp(lambda x) is lambda^k exp[0, lambda, ..., k lambda].
  std::vector<cplx> u;
  for (int k = 0; k <= dmax; ++k) u.emplace_back(lambda * k, 0.0);
  const auto dd = exp_divided_differences(u);

  // log sup_{x in [0,1]} prod_{i<k} |x - i|, by a grid scan and golden-section refinement.
  auto log_omega = [](int k, double x) {
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += std::log(std::abs(x - i));
    return s;
  };
  auto log_sup_omega = [&](int k) {
    if (k == 0) return 0.0;
    if (k == 1) return 0.0;
    const int n = 2000;
    int best = 1;
    for (int i = 1; i < n; ++i) {
      if (log_omega(k, static_cast<double>(i) / n) > log_omega(k, static_cast<double>(best) / n)) best = i;
    }
    double lo = static_cast<double>(best - 1) / n, hi = static_cast<double>(best + 1) / n;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
    for (int it = 0; it < 80; ++it) {
      if (log_omega(k, c) > log_omega(k, d)) {
        hi = d;
      } else {
        lo = c;
      }
      c = hi - g * (hi - lo);
      d = lo + g * (hi - lo);
    }
    return log_omega(k, 0.5 * (lo + hi));
  };

  for (int k = 0; k <= dmax; ++k) {
    const double coeff = std::abs(dd[static_cast<std::size_t>(k)]) * std::pow(std::abs(lambda), k);
    const double lc = coeff > 0 ? std::log(std::abs(dd[static_cast<std::size_t>(k)])) + k * std::log(std::abs(lambda))
                                : -std::numeric_limits<double>::infinity();
    rep.log_term_sup.push_back(lc + log_sup_omega(k));
  }
  for (int k = 1; k <= dmax; ++k) {
    rep.ratios.push_back(std::exp(rep.log_term_sup[static_cast<std::size_t>(k)] - rep.log_term_sup[static_cast<std::size_t>(k - 1)]));
  }
  rep.raw_ratio = rep.ratios.back();
  // The successive ratio approaches its limit like 1 - c/k; one Richardson
  // step removes that term.
  rep.measured_ratio = 2.0 * rep.ratios[static_cast<std::size_t>(dmax - 1)] - rep.ratios[static_cast<std::size_t>(dmax / 2 - 1)];
  rep.converges = rep.measured_ratio < 1.0;
  return rep;
}

double polya_bisect(double lo, double hi, int dmax, int steps) {
  if (!polya_run(lo, dmax).converges || polya_run(hi, dmax).converges) {
    throw std::invalid_argument("polya_bisect needs a converging lower and diverging upper end");
  }
  for (int s = 0; s < steps; ++s) {
    const double mid = 0.5 * (lo + hi);
    if (polya_run(mid, dmax).converges) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::string report_csv(const ExperimentReport& r) {
  std::ostringstream os;
  os << "d,sup_error,root_error,seconds\n";
  for (const auto& rec : r.records) {
    os << rec.d << ',' << format_double(rec.sup_error) << ',' << format_double(rec.root_error) << ','
       << format_double(rec.seconds) << '\n';
  }
  return os.str();
}

namespace {
json double_json(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}
double json_double(const json& j) {
  if (j.is_string()) return parse_double(j.get<std::string>());
  return j.get<double>();
}
}  // namespace

json report_json(const ExperimentReport& r) {
  json recs = json::array();
  for (const auto& rec : r.records) {
    recs.push_back({{"d", rec.d},
                    {"sup_error", double_json(rec.sup_error)},
                    {"root_error", double_json(rec.root_error)},
                    {"seconds", double_json(rec.seconds)}});
  }
  json j{{"name", r.name},
         {"records", recs},
         {"fit",
          {{"slope", double_json(r.fit.slope)},
           {"slope_stderr", double_json(r.fit.slope_stderr)},
           {"rate", double_json(r.fit.rate)},
           {"degrees_used", r.fit.used}}},
         {"metadata", r.metadata}};
  j["reference_rate"] = r.reference_rate ? double_json(*r.reference_rate) : json(nullptr);
  return j;
}

ExperimentReport report_from_json(const json& j) {
  ExperimentReport r;
  r.name = j.at("name").get<std::string>();
  for (const auto& rec : j.at("records")) {
    r.records.push_back({rec.at("d").get<int>(), json_double(rec.at("sup_error")), json_double(rec.at("root_error")),
                         json_double(rec.at("seconds"))});
  }
  const auto& fit = j.at("fit");
  r.fit.slope = json_double(fit.at("slope"));
  r.fit.slope_stderr = json_double(fit.at("slope_stderr"));
  r.fit.rate = json_double(fit.at("rate"));
  r.fit.used = fit.at("degrees_used").get<std::vector<int>>();
  if (!j.at("reference_rate").is_null()) r.reference_rate = json_double(j.at("reference_rate"));
  r.metadata = j.at("metadata");
  return r;
}

void report_write(const ExperimentReport& r, const std::filesystem::path& dir, const std::string& stem) {
  write_text_file(dir / (stem + ".csv"), report_csv(r));
  write_text_file(dir / (stem + ".json"), report_json(r).dump(2) + "\n");
}

ExperimentReport report_read(const std::filesystem::path& dir, const std::string& stem) {
  return report_from_json(read_json_file(dir / (stem + ".json")));
}

}  // namespace nprox
