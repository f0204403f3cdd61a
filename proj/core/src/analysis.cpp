#include "nprox/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <nlohmann/json.hpp>

#include "nprox/errors.hpp"
#include "nprox/measure.hpp"
#include "nprox/projector.hpp"
#include "nprox/zoo.hpp"

namespace nprox {

using json = nlohmann::json;

CompactModel CompactModel::interval() { return CompactModel{Kind::Interval, {}}; }
CompactModel CompactModel::disk() { return CompactModel{Kind::Disk, {}}; }

CompactModel CompactModel::product(std::vector<CompactModel> factors) {
  if (factors.empty()) throw UnsupportedModel("product of no factors");
  std::vector<CompactModel> flat;
  for (auto& f : factors) {
    if (f.kind == Kind::Product) flat.insert(flat.end(), f.factors.begin(), f.factors.end());
    else flat.push_back(std::move(f));
  }
  return CompactModel{Kind::Product, std::move(flat)};
}

int CompactModel::nvars() const {
  if (kind != Kind::Product) return 1;
  return static_cast<int>(factors.size());
}

std::string CompactModel::name() const {
  switch (kind) {
    case Kind::Interval:
      return "interval";
    case Kind::Disk:
      return "disk";
    case Kind::Product: {
      std::string s;
      for (const auto& f : factors) s += (s.empty() ? "" : "x") + f.name();
      return s;
    }
  }
  return "?";
}

CompactModel compact_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "interval") return CompactModel::interval();
    if (s == "disk") return CompactModel::disk();
    throw UnsupportedModel("unknown compact '" + s + "'");
  }
  std::vector<CompactModel> fs;
  if (j.is_array()) {
    for (std::size_t i = 1; i < j.size(); ++i) fs.push_back(compact_from_json(j[i]));
  } else {
    if (j.at("kind").get<std::string>() != "product") return compact_from_json(j.at("kind"));
    for (const auto& f : j.at("factors")) fs.push_back(compact_from_json(f));
  }
  return CompactModel::product(std::move(fs));
}

namespace {

const std::vector<CompactModel>& factor_list(const CompactModel& k, std::vector<CompactModel>& scratch) {
  if (k.kind == CompactModel::Kind::Product) return k.factors;
  scratch = {k};
  return scratch;
}

double interval_green(cplx z) {
  cplx w = z + std::sqrt(z * z - 1.0);
  double a = std::abs(w);
  if (a < 1.0) a = 1.0 / a;
  return std::max(0.0, std::log(a));
}

// Tensor grid over per-factor parameter lists.
std::vector<Point> cartesian(const std::vector<std::vector<cplx>>& per_factor) {
  std::vector<Point> out{Point{}};
  for (const auto& vals : per_factor) {
    std::vector<Point> next;
    next.reserve(out.size() * vals.size());
    for (const auto& p : out) {
      for (const auto& v : vals) {
        Point q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::size_t per_factor(std::size_t m, std::size_t factors, std::size_t cap = std::size_t{1} << 18) {
  std::size_t per = m;
  while (per > 8) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < factors; ++i) total *= per;
    if (total <= cap) break;
    per = per * 3 / 4;
  }
  return per;
}

// Sup-set parameter: theta in [0, pi] for the interval, [0, 2 pi) for the circle.
cplx sup_param_point(CompactModel::Kind kind, double theta) {
  if (kind == CompactModel::Kind::Interval) return std::cos(theta);
  return std::polar(1.0, theta);
}

double sup_param_span(CompactModel::Kind kind) {
  return kind == CompactModel::Kind::Interval ? std::numbers::pi : 2.0 * std::numbers::pi;
}

}  // namespace

double extremal_value(const CompactModel& k, const Point& z) {
  if (static_cast<int>(z.size()) != k.nvars()) throw DimensionMismatch("point dimension differs from compact");
  switch (k.kind) {
    case CompactModel::Kind::Interval:
      return interval_green(z[0]);
    case CompactModel::Kind::Disk:
      return std::max(0.0, std::log(std::abs(z[0])));
    case CompactModel::Kind::Product: {
      double v = 0.0;
      for (std::size_t i = 0; i < k.factors.size(); ++i) v = std::max(v, extremal_value(k.factors[i], {z[i]}));
      return v;
    }
  }
  throw UnsupportedModel("unsupported compact");
}

std::vector<Point> level_set_boundary(const CompactModel& k, double r, std::size_t m) {
  if (!(r > 1.0)) throw std::invalid_argument("level set needs R > 1");
  std::vector<CompactModel> scratch;
  const auto& fs = factor_list(k, scratch);
  const std::size_t per = per_factor(m, fs.size());
  std::vector<std::vector<cplx>> vals;
  for (const auto& f : fs) {
    std::vector<cplx> v;
    for (std::size_t i = 0; i < per; ++i) {
      const cplx w = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(per));
      v.push_back(f.kind == CompactModel::Kind::Interval ? 0.5 * (w + 1.0 / w) : w);
    }
    vals.push_back(std::move(v));
  }
  return cartesian(vals);
}

std::vector<Point> sample(const CompactModel& k, std::size_t m) {
  if (m < 2) throw std::invalid_argument("sample needs m >= 2");
  std::vector<CompactModel> scratch;
  const auto& fs = factor_list(k, scratch);
  std::vector<std::vector<cplx>> vals;
  for (const auto& f : fs) {
    std::vector<cplx> v;
    if (f.kind == CompactModel::Kind::Interval) {
      for (std::size_t i = 0; i < m; ++i) v.emplace_back(std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(m - 1)));
    } else {
      const std::size_t rings = std::max<std::size_t>(2, m / 8);
      v.emplace_back(0.0);
      for (std::size_t j = 1; j <= rings; ++j) {
        const double rad = static_cast<double>(j) / static_cast<double>(rings);
        for (std::size_t i = 0; i < m; ++i) v.push_back(std::polar(rad, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m)));
      }
    }
    vals.push_back(std::move(v));
  }
  return cartesian(vals);
}

std::vector<Point> sup_set_sample(const CompactModel& k, std::size_t m) {
  std::vector<CompactModel> scratch;
  const auto& fs = factor_list(k, scratch);
  const std::size_t per = per_factor(m, fs.size());
  std::vector<std::vector<cplx>> vals;
  for (const auto& f : fs) {
    std::vector<cplx> v;
    const bool interval = f.kind == CompactModel::Kind::Interval;
    for (std::size_t i = 0; i < per; ++i) {
      const double t = interval ? std::numbers::pi * static_cast<double>(i) / static_cast<double>(per - 1)
                                : 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(per);
      v.push_back(sup_param_point(f.kind, t));
    }
    vals.push_back(std::move(v));
  }
  return cartesian(vals);
}

double polynomial_sup(const Polynomial& p, const CompactModel& k, std::size_t m) {
  std::vector<CompactModel> scratch;
  const auto& fs = factor_list(k, scratch);
  const std::size_t nf = fs.size();
  const std::size_t per = per_factor(m, nf);
  if (p.nvars() != static_cast<int>(nf)) throw DimensionMismatch("polynomial and compact differ in dimension");

  auto value = [&](const std::vector<double>& th) {
    Point z(nf);
    for (std::size_t i = 0; i < nf; ++i) z[i] = sup_param_point(fs[i].kind, th[i]);
    return std::abs(p(z));
  };

  // Grid scan, keeping the best few parameter tuples.
  std::vector<double> step(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    const bool interval = fs[i].kind == CompactModel::Kind::Interval;
    step[i] = sup_param_span(fs[i].kind) / static_cast<double>(interval ? per - 1 : per);
  }
  std::vector<std::pair<double, std::vector<double>>> best;
  std::vector<std::size_t> counter(nf, 0);
  while (true) {
    std::vector<double> th(nf);
    for (std::size_t i = 0; i < nf; ++i) th[i] = step[i] * static_cast<double>(counter[i]);
    const double v = value(th);
    if (best.size() < 8 || v > best.back().first) {
      best.emplace_back(v, th);
      std::sort(best.begin(), best.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
      if (best.size() > 8) best.pop_back();
    }
    std::size_t i = 0;
    while (i < nf && ++counter[i] == per) counter[i++] = 0;
    if (i == nf) break;
  }

  // Coordinate-wise golden-section refinement around each candidate.
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double sup = 0.0;
  for (auto& [v, th] : best) {
    double cur = v;
    for (int sweep = 0; sweep < 4; ++sweep) {
      for (std::size_t i = 0; i < nf; ++i) {
        double a = th[i] - step[i];
        double b = th[i] + step[i];
        if (fs[i].kind == CompactModel::Kind::Interval) {
          a = std::max(a, 0.0);
          b = std::min(b, std::numbers::pi);
        }
        auto at = [&](double t) {
          auto x = th;
          x[i] = t;
          return value(x);
        };
        double c = b - g * (b - a), d = a + g * (b - a);
        double fc = at(c), fd = at(d);
        for (int it = 0; it < 60; ++it) {
          if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = at(c);
          } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = at(d);
          }
        }
        const double t = 0.5 * (a + b);
        const double ft = at(t);
        if (ft > cur) {
          cur = ft;
          th[i] = t;
        }
      }
    }
    sup = std::max(sup, cur);
  }
  return sup;
}

double bws_check(const Polynomial& p, const CompactModel& k, double r, std::size_t m_k, std::size_t m_r) {
  const int deg = p.degree();
  if (deg < 0) return 0.0;
  const double sup_k = polynomial_sup(p, k, m_k);
  double sup_r = 0.0;
  for (const auto& z : level_set_boundary(k, r, m_r)) sup_r = std::max(sup_r, std::abs(p(z)));
  return sup_r / (std::pow(r, deg) * sup_k);
}

namespace {

double segment_distance(cplx p, cplx a, cplx b) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Distance from p to the zonotope sum_i g_i [-1, 1].
double zonotope_distance(cplx p, std::vector<cplx> gens) {
  gens.erase(std::remove(gens.begin(), gens.end(), cplx(0.0)), gens.end());
  if (gens.empty()) return std::abs(p);
  for (auto& g : gens) {
    if (g.imag() < 0 || (g.imag() == 0 && g.real() < 0)) g = -g;
  }
  std::sort(gens.begin(), gens.end(), [](cplx a, cplx b) { return std::arg(a) < std::arg(b); });
  cplx v = 0.0;
  for (const auto& g : gens) v -= g;
  std::vector<cplx> poly{v};
  for (const auto& g : gens) poly.push_back(poly.back() + 2.0 * g);
  for (const auto& g : gens) poly.push_back(poly.back() - 2.0 * g);
  poly.pop_back();
  double area = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const cplx a = poly[i], b = poly[(i + 1) % poly.size()];
    area += a.real() * b.imag() - a.imag() * b.real();
  }
  if (area > 1e-14) {
    bool inside = true;
    for (std::size_t i = 0; i < poly.size() && inside; ++i) {
      const cplx a = poly[i], b = poly[(i + 1) % poly.size()];
      const cplx e = b - a, q = p - a;
      inside = e.real() * q.imag() - e.imag() * q.real() >= 0.0;
    }
    if (inside) return 0.0;
  }
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) d = std::min(d, segment_distance(p, poly[i], poly[(i + 1) % poly.size()]));
  return d;
}

}  // namespace

void check_poles_on(const TestFunction& f, const CompactModel& k) {
  if (f.nvars() != k.nvars()) throw DimensionMismatch("test function and compact differ in dimension");
  std::vector<CompactModel> scratch;
  const auto& fs = factor_list(k, scratch);
  for (const auto& l : f.pole_forms()) {
    // The image of K under l is c0 + sum_i c_i K_i: segments and disks.
    std::vector<cplx> gens;
    double radius = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].kind == CompactModel::Kind::Interval) gens.push_back(l.coeffs[i]);
      else radius += std::abs(l.coeffs[i]);
    }
    if (zonotope_distance(-l.offset, gens) <= radius + 1e-14) {
      throw PoleError("zero set of an affine form", "the compact " + k.name());
    }
  }
}

RateFit fit_geometric_rate(const std::vector<int>& degrees, const std::vector<double>& errors, double floor) {
  if (degrees.size() != errors.size()) throw DimensionMismatch("degrees and errors differ in length");
  std::vector<std::size_t> above;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!(errors[i] > floor)) break;
    above.push_back(i);
  }
  RateFit fit;
  if (above.size() < 2) return fit;
  const std::size_t start = above.size() / 2;
  std::vector<std::size_t> tail(above.begin() + static_cast<std::ptrdiff_t>(std::min(start, above.size() - 2)), above.end());
  double sx = 0, sy = 0;
  for (auto i : tail) {
    sx += degrees[i];
    sy += std::log(errors[i]);
    fit.used.push_back(degrees[i]);
  }
  const double n = static_cast<double>(tail.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (auto i : tail) {
    sxx += (degrees[i] - mx) * (degrees[i] - mx);
    sxy += (degrees[i] - mx) * (std::log(errors[i]) - my);
  }
  fit.slope = sxy / sxx;
  if (tail.size() > 2) {
    double ss = 0;
    for (auto i : tail) {
      const double res = std::log(errors[i]) - (my + fit.slope * (degrees[i] - mx));
      ss += res * res;
    }
    fit.slope_stderr = std::sqrt(ss / (n - 2.0) / sxx);
  }
  fit.rate = std::exp(fit.slope);
  return fit;
}

namespace {

NewtonProjector model_orthogonal(const CompactModel& k, int d, int nodes) {
  switch (k.kind) {
    case CompactModel::Kind::Interval:
      return orthogonal(chebyshev_measure(nodes), d);
    case CompactModel::Kind::Disk:
      return orthogonal(circle_measure(nodes), d);
    case CompactModel::Kind::Product: {
      NewtonProjector p = model_orthogonal(k.factors[0], d, nodes);
      for (std::size_t i = 1; i < k.factors.size(); ++i) p = newton_product(p, model_orthogonal(k.factors[i], d, nodes));
      return p;
    }
  }
  throw UnsupportedModel("unsupported compact");
}

}  // namespace

RhoEstimate rho_estimate(const TestFunction& f, const CompactModel& k, int dmax, int measure_nodes, std::size_t grid) {
  check_poles_on(f, k);
  if (dmax < 1) throw std::invalid_argument("rho_estimate needs dmax >= 1");
  const int nodes = measure_nodes > 0 ? measure_nodes : std::max(4 * dmax, 64);
  const auto proj = model_orthogonal(k, dmax, nodes);
  const auto rhs = proj.conditions(f);
  const auto pts = sup_set_sample(k, grid);
  std::vector<cplx> fv;
  double fnorm = 0.0;
  for (const auto& z : pts) {
    fv.push_back(f(z));
    fnorm = std::max(fnorm, std::abs(fv.back()));
  }
  RhoEstimate est;
  for (int d = 0; d <= dmax; ++d) {
    const Polynomial p = proj.solve(rhs, d);
    double e = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) e = std::max(e, std::abs(fv[i] - p(pts[i])));
    est.degrees.push_back(d);
    est.errors.push_back(e);
  }
  est.fit = fit_geometric_rate(est.degrees, est.errors, 1e-12 * std::max(fnorm, 1e-300));
  // An exact reproduction shows up as a collapse far below the fitted rate.
  bool collapsed = false;
  const std::size_t run = est.fit.used.empty() ? 0 : static_cast<std::size_t>(est.fit.used.back()) + 1;
  if (!est.fit.used.empty() && run < est.errors.size() && est.fit.rate > 0.0)
    collapsed = est.errors[run] < 1e-4 * est.fit.rate * est.errors[run - 1];
  if (collapsed || est.fit.used.size() < 2 || !(est.fit.rate > 0.0)) {
    est.rho = est.rho_low = est.rho_high = std::numeric_limits<double>::infinity();
  } else {
    est.rho = 1.0 / est.fit.rate;
    est.rho_low = std::exp(-(est.fit.slope + 2.0 * est.fit.slope_stderr));
    est.rho_high = std::exp(-(est.fit.slope - 2.0 * est.fit.slope_stderr));
  }
  return est;
}

NormSpec NormSpec::linf() { return NormSpec{}; }

NormSpec NormSpec::l1() {
  NormSpec n;
  n.kind = Kind::L1;
  return n;
}

NormSpec NormSpec::l2() {
  NormSpec n;
  n.kind = Kind::L2;
  return n;
}

NormSpec NormSpec::weighted_sum(NormSpec n1, NormSpec n2, int split, double a1, double a2) {
  if (!(a1 > 0 && a2 > 0) || split < 1) throw std::invalid_argument("weighted norm needs positive weights and split");
  NormSpec n;
  n.kind = Kind::WeightedSum;
  n.split = split;
  n.a1 = a1;
  n.a2 = a2;
  n.left = std::make_shared<const NormSpec>(std::move(n1));
  n.right = std::make_shared<const NormSpec>(std::move(n2));
  return n;
}

NormSpec NormSpec::power_combined(NormSpec n1, NormSpec n2, int split, double a1, double a2, double omega) {
  if (!(omega > 0)) throw std::invalid_argument("power-combined norm needs omega > 0");
  NormSpec n = weighted_sum(std::move(n1), std::move(n2), split, a1, a2);
  n.kind = Kind::PowerCombined;
  n.omega = omega;
  return n;
}

NormSpec norm_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "linf") return NormSpec::linf();
    if (s == "l1") return NormSpec::l1();
    if (s == "l2") return NormSpec::l2();
    throw std::invalid_argument("unknown norm '" + s + "'");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "weighted_sum" && kind != "power_combined") return norm_from_json(j.at("kind"));
  auto n1 = norm_from_json(j.at("left"));
  auto n2 = norm_from_json(j.at("right"));
  const int split = j.at("split").get<int>();
  const double a1 = j.value("a1", 1.0), a2 = j.value("a2", 1.0);
  if (kind == "weighted_sum") return NormSpec::weighted_sum(n1, n2, split, a1, a2);
  return NormSpec::power_combined(n1, n2, split, a1, a2, j.at("omega").get<double>());
}

double norm_value(const NormSpec& n, std::span<const cplx> z) {
  switch (n.kind) {
    case NormSpec::Kind::Linf: {
      double m = 0;
      for (const auto& c : z) m = std::max(m, std::abs(c));
      return m;
    }
    case NormSpec::Kind::L1: {
      double s = 0;
      for (const auto& c : z) s += std::abs(c);
      return s;
    }
    case NormSpec::Kind::L2: {
      double s = 0;
      for (const auto& c : z) s += std::norm(c);
      return std::sqrt(s);
    }
    case NormSpec::Kind::WeightedSum:
    case NormSpec::Kind::PowerCombined: {
      if (n.split >= static_cast<int>(z.size())) throw DimensionMismatch("norm split beyond point dimension");
      const auto s = static_cast<std::size_t>(n.split);
      const double x = norm_value(*n.left, z.subspan(0, s));
      const double y = norm_value(*n.right, z.subspan(s));
      if (n.kind == NormSpec::Kind::WeightedSum) return n.a1 * x + n.a2 * y;
      return std::pow(n.a1 * std::pow(x, n.omega) + n.a2 * std::pow(y, n.omega), 1.0 / n.omega);
    }
  }
  return 0.0;
}

namespace {
double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }
}  // namespace

double delta_N(const MultiIndex& alpha, const NormSpec& n) {
  const double k = alpha.degree();
  switch (n.kind) {
    case NormSpec::Kind::Linf:
      return 1.0;
    case NormSpec::Kind::L1:
    case NormSpec::Kind::L2: {
      if (k == 0) return 1.0;
      double lg = 0;
      for (int a : alpha.exponents()) lg += xlogx(a) - a * std::log(k);
      return std::exp(n.kind == NormSpec::Kind::L1 ? lg : 0.5 * lg);
    }
    case NormSpec::Kind::WeightedSum:
    case NormSpec::Kind::PowerCombined: {
      if (n.split >= alpha.nvars()) throw DimensionMismatch("norm split beyond multi-index length");
      const auto a1 = alpha.slice(0, n.split);
      const auto a2 = alpha.slice(n.split, alpha.nvars() - n.split);
      const double p = a1.degree(), q = a2.degree();
      // Maximize s^p t^q on a1 s + a2 t = 1 (or a1 s^w + a2 t^w = 1).
      double lg = xlogx(p) + xlogx(q) - xlogx(p + q) - p * std::log(n.a1) - q * std::log(n.a2);
      if (n.kind == NormSpec::Kind::PowerCombined) lg /= n.omega;
      return std::exp(lg) * delta_N(a1, *n.left) * delta_N(a2, *n.right);
    }
  }
  throw std::invalid_argument("unsupported norm");
}

double growth_norm_monomial(const MultiIndex& alpha, double omega, double a, const NormSpec& n) {
  if (!(omega > 0 && a > 0)) throw std::invalid_argument("growth parameters must be positive");
  const double k = alpha.degree();
  if (k == 0) return 1.0;
  return delta_N(alpha, n) * std::pow(k / (std::numbers::e * omega * a), k / omega);
}

double sup_on_norm_sphere(const TestFunction& f, const NormSpec& n, double r, std::size_t m) {
  const int nv = f.nvars();
  std::mt19937_64 rng(0x6e70726fULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double best = 0.0;
  auto consider = [&](const std::vector<double>& mod, const std::vector<double>& phase) {
    Point z(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) z[static_cast<std::size_t>(i)] = std::polar(mod[static_cast<std::size_t>(i)], phase[static_cast<std::size_t>(i)]);
    const double nz = norm_value(n, z);
    if (!(nz > 0)) return;
    for (auto& c : z) c *= r / nz;
    best = std::max(best, std::abs(f(z)));
  };
  // Coordinate-subset directions with zero phase, then random points.
  for (unsigned mask = 1; mask < (1u << nv); ++mask) {
    std::vector<double> mod(static_cast<std::size_t>(nv)), ph(static_cast<std::size_t>(nv), 0.0);
    for (int i = 0; i < nv; ++i) mod[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? 1.0 : 0.0;
    consider(mod, ph);
  }
  for (std::size_t s = 0; s < m * static_cast<std::size_t>(nv); ++s) {
    std::vector<double> mod(static_cast<std::size_t>(nv)), ph(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) {
      mod[static_cast<std::size_t>(i)] = unit(rng);
      ph[static_cast<std::size_t>(i)] = 2.0 * std::numbers::pi * unit(rng);
    }
    consider(mod, ph);
  }
  return best;
}

double coefficient_bound(const MultiIndex& alpha, const NormSpec& n, double t, double m) {
  return std::pow(t, -alpha.degree()) * m / delta_N(alpha, n);
}

std::vector<CoefficientBound> power_series_coeff_bound(const Polynomial& f, const NormSpec& n, double t, std::size_t m) {
  if (!(t > 0)) throw std::invalid_argument("coefficient bound needs t > 0");
  const double big_m = sup_on_norm_sphere(TestFunction::polynomial(f), n, t, m);
  const auto& idx = graded_lex_indices(f.nvars(), f.degree_bound());
  std::vector<CoefficientBound> out;
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const double a = std::abs(f.coeffs()[r]);
    const double b = coefficient_bound(idx[r], n, t, big_m);
    out.push_back({idx[r], a, b, a <= b * (1.0 + 1e-12)});
  }
  return out;
}

double gelfond_constant(double omega) {
  if (!(omega > 0)) throw std::invalid_argument("gelfond_constant needs omega > 0");
  // t = u^(1/omega) removes the t^(omega - 1) endpoint behaviour.
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double top = std::pow(2.0, -omega);
  auto g = [omega](double u) { return 1.0 / (1.0 - std::pow(u, 1.0 / omega)); };
  return integrator.integrate(g, 0.0, top, 1e-15) / omega;
}

double omega_density(const PointSequence& points, const NormSpec& n, double omega, double rmax, std::size_t grid) {
  if (!(rmax > 1.0)) throw std::invalid_argument("omega_density needs rmax > 1");
  std::vector<double> norms;
  for (const auto& p : points.points) norms.push_back(norm_value(n, p));
  std::sort(norms.begin(), norms.end());
  const double lo = std::log(std::sqrt(rmax)), hi = std::log(rmax);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid; ++i) {
    const double r = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1));
    const auto count = static_cast<double>(std::upper_bound(norms.begin(), norms.end(), r) - norms.begin());
    best = std::min(best, count / std::pow(r, omega));
  }
  return best;
}

}  // namespace nprox
