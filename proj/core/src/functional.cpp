#include "nprox/functional.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "nprox/divided_difference.hpp"
#include "nprox/errors.hpp"
#include "nprox/simplex.hpp"

namespace nprox {

using json = nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

int point_dim(const Point& a) {
  if (a.empty()) throw DimensionMismatch("functional support point has no coordinates");
  return static_cast<int>(a.size());
}

json point_json(const Point& a) {
  json out = json::array();
  for (const auto& c : a) out.push_back(complex_to_json(c));
  return out;
}

std::string point_text(const Point& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    if (a[i].imag() == 0.0) os << a[i].real();
    else os << a[i];
  }
  os << ")";
  return os.str();
}

std::string index_text(const MultiIndex& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < a.nvars(); ++i) os << (i ? "," : "") << a[i];
  os << "]";
  return os.str();
}

// Support of a functional as pieces: a finite point set, or the convex hull of
// the listed points.
struct Piece {
  std::vector<Point> pts;
  bool hull;
};

Point concat(const Point& a, const Point& b) {
  Point r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::vector<Piece> support_pieces(const Functional& mu) {
  return std::visit(
      overloaded{
          [](const PointEval& f) { return std::vector<Piece>{{{f.a}, false}}; },
          [](const DerivativeEval& f) { return std::vector<Piece>{{{f.a}, false}}; },
          [](const KerginCondition& f) { return std::vector<Piece>{{f.nodes, true}}; },
          [](const InnerProduct& f) { return std::vector<Piece>{{f.measure->nodes, false}}; },
          [](const TensorPair& f) {
            std::vector<Piece> out;
            for (const auto& l : support_pieces(*f.left)) {
              for (const auto& r : support_pieces(*f.right)) {
                if (!l.hull && !r.hull) {
                  Piece p{{}, false};
                  for (const auto& a : l.pts) {
                    for (const auto& b : r.pts) p.pts.push_back(concat(a, b));
                  }
                  out.push_back(std::move(p));
                } else if (l.hull && r.hull) {
                  Piece p{{}, true};
                  for (const auto& a : l.pts) {
                    for (const auto& b : r.pts) p.pts.push_back(concat(a, b));
                  }
                  out.push_back(std::move(p));
                } else if (l.hull) {
                  for (const auto& b : r.pts) {
                    Piece p{{}, true};
                    for (const auto& a : l.pts) p.pts.push_back(concat(a, b));
                    out.push_back(std::move(p));
                  }
                } else {
                  for (const auto& a : l.pts) {
                    Piece p{{}, true};
                    for (const auto& b : r.pts) p.pts.push_back(concat(a, b));
                    out.push_back(std::move(p));
                  }
                }
              }
            }
            return out;
          },
      },
      mu.v);
}

int gm_parameter(int k, const QuadratureOptions& opt) {
  const int exactness = opt.kergin_exactness >= 0 ? opt.kergin_exactness : 2 * k + 5;
  int s = std::max(0, (exactness - 1 + 1) / 2);
  while (s > 0 && grundmann_moller_size(k, s) > opt.max_points) --s;
  return s;
}

}  // namespace

int Functional::nvars() const {
  return std::visit(overloaded{
                        [](const PointEval& f) { return point_dim(f.a); },
                        [](const DerivativeEval& f) { return f.alpha.nvars(); },
                        [](const KerginCondition& f) { return point_dim(f.nodes.at(0)); },
                        [](const InnerProduct& f) { return f.measure->nvars; },
                        [](const TensorPair& f) { return f.left->nvars() + f.right->nvars(); },
                    },
                    v);
}

std::string Functional::describe() const {
  return std::visit(overloaded{
                        [](const PointEval& f) { return "delta" + point_text(f.a); },
                        [](const DerivativeEval& f) { return "D" + index_text(f.alpha) + "@" + point_text(f.a); },
                        [](const KerginCondition& f) {
                          std::string s = "kergin" + index_text(f.alpha) + "{";
                          for (std::size_t i = 0; i < f.nodes.size(); ++i) s += (i ? "," : "") + point_text(f.nodes[i]);
                          return s + "}";
                        },
                        [](const InnerProduct& f) { return "inner(" + f.measure->domain + ")"; },
                        [](const TensorPair& f) { return f.left->describe() + " x " + f.right->describe(); },
                    },
                    v);
}

Functional point_eval(Point a) {
  point_dim(a);
  return Functional{PointEval{std::move(a)}};
}

Functional derivative_eval(MultiIndex alpha, Point a) {
  if (alpha.nvars() != point_dim(a)) throw DimensionMismatch("derivative order and point differ in dimension");
  return Functional{DerivativeEval{std::move(alpha), std::move(a)}};
}

Functional kergin_condition(MultiIndex alpha, std::vector<Point> nodes) {
  if (static_cast<int>(nodes.size()) != alpha.degree() + 1) {
    throw DimensionMismatch("Kergin condition needs exactly |alpha| + 1 nodes");
  }
  for (const auto& z : nodes) {
    if (point_dim(z) != alpha.nvars()) throw DimensionMismatch("Kergin node dimension differs from alpha");
  }
  return Functional{KerginCondition{std::move(alpha), std::move(nodes)}};
}

Functional inner_product(Polynomial b, MeasurePtr m) {
  if (!m) throw std::invalid_argument("inner product needs a measure");
  if (b.nvars() != m->nvars) throw DimensionMismatch("basis polynomial and measure differ in dimension");
  return Functional{InnerProduct{std::move(b), std::move(m)}};
}

Functional tensor(const Functional& mu, const Functional& nu) {
  return Functional{TensorPair{std::make_shared<const Functional>(mu), std::make_shared<const Functional>(nu)}};
}

std::vector<cplx> monomial_values(const Functional& mu, int d) {
  const int n = mu.nvars();
  const auto& idx = graded_lex_indices(n, d);
  return std::visit(
      overloaded{
          [&](const PointEval& f) { return monomial_values_at(f.a, d); },
          [&](const DerivativeEval& f) {
            std::vector<cplx> out(idx.size(), cplx(0.0));
            const int k = f.alpha.degree();
            if (k > d) return out;
            const auto pw = monomial_values_at(f.a, d - k);
            for (std::size_t r = 0; r < idx.size(); ++r) {
              if (f.alpha.divides(idx[r])) out[r] = falling_factorial(idx[r], f.alpha) * pw[graded_lex_rank(idx[r] - f.alpha)];
            }
            return out;
          },
          [&](const KerginCondition& f) {
            std::vector<cplx> out(idx.size(), cplx(0.0));
            const int k = f.alpha.degree();
            if (k > d) return out;
            const auto mom = simplex_affine_moments(f.nodes, d - k);
            for (std::size_t r = 0; r < idx.size(); ++r) {
              if (f.alpha.divides(idx[r])) out[r] = falling_factorial(idx[r], f.alpha) * mom[graded_lex_rank(idx[r] - f.alpha)];
            }
            return out;
          },
          [&](const InnerProduct& f) {
            std::vector<cplx> out(idx.size(), cplx(0.0));
            const auto& m = *f.measure;
            for (std::size_t i = 0; i < m.nodes.size(); ++i) {
              const cplx w = m.weights[i] * std::conj(f.b(m.nodes[i]));
              const auto v = monomial_values_at(m.nodes[i], d);
              for (std::size_t r = 0; r < idx.size(); ++r) out[r] += w * v[r];
            }
            return out;
          },
          [&](const TensorPair& f) {
            const int n1 = f.left->nvars();
            const int n2 = f.right->nvars();
            const auto l = monomial_values(*f.left, d);
            const auto r = monomial_values(*f.right, d);
            std::vector<cplx> out(idx.size());
            for (std::size_t j = 0; j < idx.size(); ++j) {
              out[j] = l[graded_lex_rank(idx[j].slice(0, n1))] * r[graded_lex_rank(idx[j].slice(n1, n2))];
            }
            return out;
          },
      },
      mu.v);
}

cplx apply_to_polynomial(const Functional& mu, const Polynomial& p) {
  if (mu.nvars() != p.nvars()) throw DimensionMismatch("functional and polynomial differ in dimension");
  const auto v = monomial_values(mu, p.degree_bound());
  cplx s = 0.0;
  for (std::size_t r = 0; r < v.size(); ++r) s += v[r] * p.coeffs()[r];
  return s;
}

std::vector<RuleTerm> to_rule(const Functional& mu, const QuadratureOptions& opt) {
  return std::visit(
      overloaded{
          [](const PointEval& f) { return std::vector<RuleTerm>{{1.0, MultiIndex(point_dim(f.a)), f.a}}; },
          [](const DerivativeEval& f) { return std::vector<RuleTerm>{{1.0, f.alpha, f.a}}; },
          [&](const KerginCondition& f) {
            const int k = f.alpha.degree();
            std::vector<RuleTerm> out;
            for (const auto& node : grundmann_moller(k, gm_parameter(k, opt))) {
              Point x(f.nodes[0].size(), cplx(0.0));
              for (std::size_t j = 0; j < f.nodes.size(); ++j) {
                for (std::size_t c = 0; c < x.size(); ++c) x[c] += node.bary[j] * f.nodes[j][c];
              }
              out.push_back({node.weight, f.alpha, std::move(x)});
            }
            return out;
          },
          [](const InnerProduct& f) {
            std::vector<RuleTerm> out;
            const auto& m = *f.measure;
            for (std::size_t i = 0; i < m.nodes.size(); ++i) {
              out.push_back({m.weights[i] * std::conj(f.b(m.nodes[i])), MultiIndex(m.nvars), m.nodes[i]});
            }
            return out;
          },
          [&](const TensorPair& f) {
            const auto l = to_rule(*f.left, opt);
            const auto r = to_rule(*f.right, opt);
            std::vector<RuleTerm> out;
            out.reserve(l.size() * r.size());
            for (const auto& a : l) {
              for (const auto& b : r) out.push_back({a.weight * b.weight, a.alpha.concat(b.alpha), concat(a.x, b.x)});
            }
            return out;
          },
      },
      mu.v);
}

void check_poles(const Functional& mu, const TestFunction& f) {
  const auto forms = f.pole_forms();
  if (forms.empty()) return;
  const auto pieces = support_pieces(mu);
  for (const auto& l : forms) {
    for (const auto& piece : pieces) {
      std::vector<cplx> u;
      for (const auto& x : piece.pts) u.push_back(l(x));
      if (piece.hull) {
        if (hull_contains_zero(u)) throw PoleError("zero set of an affine form", mu.describe());
      } else {
        for (const auto& v : u) {
          if (std::abs(v) <= 1e-300) throw PoleError("zero set of an affine form", mu.describe());
        }
      }
    }
  }
}

namespace {

cplx apply_rule(const std::vector<RuleTerm>& rule, const TestFunction& f) {
  cplx s = 0.0;
  for (const auto& t : rule) {
    if (t.weight == cplx(0.0)) continue;
    s += t.weight * f.derivative(t.alpha, t.x);
  }
  return s;
}

cplx apply_checked(const Functional& mu, const TestFunction& f, const QuadratureOptions& opt) {
  return std::visit(
      overloaded{
          [&](const PointEval& g) { return f(g.a); },
          [&](const DerivativeEval& g) { return f.derivative(g.alpha, g.a); },
          [&](const KerginCondition& g) {
            if (auto v = f.kergin_exact(g.alpha, g.nodes)) return *v;
            return apply_rule(to_rule(mu, opt), f);
          },
          [&](const InnerProduct& g) {
            const auto& m = *g.measure;
            cplx s = 0.0;
            for (std::size_t i = 0; i < m.nodes.size(); ++i) s += m.weights[i] * std::conj(g.b(m.nodes[i])) * f(m.nodes[i]);
            return s;
          },
          [&](const TensorPair& g) {
            if (auto parts = f.split_blocks(g.left->nvars())) {
              cplx s = 0.0;
              for (const auto& [a, b] : *parts) s += apply_checked(*g.left, a, opt) * apply_checked(*g.right, b, opt);
              return s;
            }
            return apply_rule(to_rule(mu, opt), f);
          },
      },
      mu.v);
}

}  // namespace

cplx apply_to_function(const Functional& mu, const TestFunction& f, const QuadratureOptions& opt) {
  if (mu.nvars() != f.nvars()) throw DimensionMismatch("functional and test function differ in dimension");
  check_poles(mu, f);
  return apply_checked(mu, f, opt);
}

json functional_to_json(const Functional& mu) {
  return std::visit(overloaded{
                        [](const PointEval& f) { return json{{"type", "point"}, {"a", point_json(f.a)}}; },
                        [](const DerivativeEval& f) {
                          return json{{"type", "derivative"}, {"alpha", f.alpha.exponents()}, {"a", point_json(f.a)}};
                        },
                        [](const KerginCondition& f) {
                          json nodes = json::array();
                          for (const auto& z : f.nodes) nodes.push_back(point_json(z));
                          return json{{"type", "kergin"}, {"alpha", f.alpha.exponents()}, {"nodes", nodes}};
                        },
                        [](const InnerProduct& f) {
                          return json{{"type", "inner"}, {"domain", f.measure->domain}, {"b", json(f.b)}};
                        },
                        [](const TensorPair& f) {
                          return json{{"type", "tensor"},
                                      {"left", functional_to_json(*f.left)},
                                      {"right", functional_to_json(*f.right)}};
                        },
                    },
                    mu.v);
}

}  // namespace nprox
