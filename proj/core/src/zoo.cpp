#include "nprox/zoo.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "nprox/errors.hpp"

namespace nprox {

using json = nlohmann::json;

NewtonProjector taylor(const Point& a, int d, const BuildOptions& opt) {
  if (d < 0) throw std::invalid_argument("taylor needs d >= 0");
  const int n = static_cast<int>(a.size());
  Levels levels;
  for (int j = 0; j <= d; ++j) {
    std::vector<Functional> level;
    for (const auto& alpha : indices_of_degree(n, j)) level.push_back(derivative_eval(alpha, a));
    levels.push_back(std::move(level));
  }
  return NewtonProjector::build(std::move(levels), opt);
}

NewtonProjector lagrange(const std::vector<cplx>& nodes, int d, const BuildOptions& opt) {
  if (d < 0) d = static_cast<int>(nodes.size()) - 1;
  if (d < 0 || static_cast<int>(nodes.size()) < d + 1) throw std::invalid_argument("lagrange needs at least d + 1 nodes");
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j < i; ++j) {
      if (nodes[static_cast<std::size_t>(i)] == nodes[static_cast<std::size_t>(j)]) {
        throw std::invalid_argument("lagrange nodes must be pairwise distinct");
      }
    }
  }
  Levels levels;
  for (int j = 0; j <= d; ++j) levels.push_back({point_eval({nodes[static_cast<std::size_t>(j)]})});
  return NewtonProjector::build(std::move(levels), opt);
}

NewtonProjector kergin(const std::vector<Point>& nodes, int d, const BuildOptions& opt) {
  if (d < 0 || static_cast<int>(nodes.size()) < d + 1) throw std::invalid_argument("kergin needs at least d + 1 nodes");
  const int m = static_cast<int>(nodes[0].size());
  Levels levels;
  for (int j = 0; j <= d; ++j) {
    std::vector<Point> prefix(nodes.begin(), nodes.begin() + j + 1);
    std::vector<Functional> level;
    for (const auto& alpha : indices_of_degree(m, j)) level.push_back(kergin_condition(alpha, prefix));
    levels.push_back(std::move(level));
  }
  return NewtonProjector::build(std::move(levels), opt);
}

NewtonProjector orthogonal(const MeasurePtr& m, int d, const BuildOptions& opt) {
  const auto basis = gram_schmidt_basis(m, d);
  const auto& idx = graded_lex_indices(m->nvars, d);
  Levels levels(static_cast<std::size_t>(d) + 1);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    levels[static_cast<std::size_t>(idx[r].degree())].push_back(inner_product(basis.b[r], m));
  }
  return NewtonProjector::build(std::move(levels), opt);
}

std::vector<cplx> family_nodes(const std::string& family, std::size_t count, const std::string& order) {
  if (count == 0) return {};
  const int d = static_cast<int>(count) - 1;
  const bool leja = order != "natural";
  if (family == "chebyshev") {
    auto v = chebyshev_nodes(d).scalars();
    return leja ? leja_order(v) : v;
  }
  if (family == "equiangular") {
    auto v = equiangular(d).scalars();
    return leja ? leja_order(v) : v;
  }
  if (family == "integer") return integer_nodes(d).scalars();
  if (family == "leja") {
    std::size_t m = 2;
    while (m < count) m *= 2;
    auto v = leja_disk(m).scalars();
    v.resize(count);
    return v;
  }
  if (family == "r_leja") {
    std::size_t m = 2;
    while (r_leja(leja_disk(m)).size() < count) m *= 2;
    auto v = r_leja(leja_disk(m)).scalars();
    v.resize(count);
    return v;
  }
  throw std::invalid_argument("unknown node family '" + family + "'");
}

MeasurePtr measure_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "circle") return circle_measure(j.at("nodes").get<int>());
  if (kind == "chebyshev") return chebyshev_measure(j.at("nodes").get<int>());
  if (kind == "product") return product_measure(measure_from_json(j.at("left")), measure_from_json(j.at("right")));
  throw std::invalid_argument("unknown measure kind '" + kind + "'");
}

namespace {

// Coordinates are numbers or [re, im] pairs; a bare number is a point in one variable.
Point point_from_json(const json& j) {
  if (!j.is_array()) return {complex_from_json(j)};
  Point p;
  for (const auto& c : j) p.push_back(complex_from_json(c));
  return p;
}

}  // namespace

int spec_nvars(const json& spec) {
  const auto kind = spec.at("kind").get<std::string>();
  if (kind == "taylor") return static_cast<int>(point_from_json(spec.at("center")).size());
  if (kind == "lagrange") return 1;
  if (kind == "kergin") {
    if (spec.contains("nodes")) return static_cast<int>(point_from_json(spec.at("nodes").at(0)).size());
    return 2;
  }
  if (kind == "orthogonal") return measure_from_json(spec.at("measure"))->nvars;
  if (kind == "product") return spec_nvars(spec.at("left")) + spec_nvars(spec.at("right"));
  throw std::invalid_argument("unknown projector kind '" + kind + "'");
}

NewtonProjector projector_from_json(const json& spec, int degree, const BuildOptions& opt) {
  const auto kind = spec.at("kind").get<std::string>();
  const int d = degree >= 0 ? degree : spec.value("degree", -1);
  if (kind == "product") {
    if (d < 0) throw std::invalid_argument("product spec needs a degree");
    return newton_product(projector_from_json(spec.at("left"), d, opt), projector_from_json(spec.at("right"), d, opt), opt);
  }
  if (d < 0) throw std::invalid_argument("projector spec needs a degree");
  if (kind == "taylor") return taylor(point_from_json(spec.at("center")), d, opt);
  if (kind == "lagrange") {
    std::vector<cplx> nodes;
    if (spec.contains("nodes")) {
      for (const auto& c : spec.at("nodes")) nodes.push_back(complex_from_json(c));
    } else {
      nodes = family_nodes(spec.at("family").get<std::string>(), static_cast<std::size_t>(d) + 1,
                           spec.value("order", std::string("leja")));
    }
    return lagrange(nodes, d, opt);
  }
  if (kind == "kergin") {
    std::vector<Point> nodes;
    if (spec.contains("nodes")) {
      for (const auto& z : spec.at("nodes")) nodes.push_back(point_from_json(z));
    } else {
      const auto family = spec.value("family", std::string("leja_planar"));
      if (family != "leja_planar") throw std::invalid_argument("kergin family must be leja_planar");
      std::size_t m = 2;
      while (m < static_cast<std::size_t>(d) + 1) m *= 2;
      nodes = planar(leja_disk(m)).points;
    }
    return kergin(nodes, d, opt);
  }
  if (kind == "orthogonal") return orthogonal(measure_from_json(spec.at("measure")), d, opt);
  throw std::invalid_argument("unknown projector kind '" + kind + "'");
}

}  // namespace nprox
