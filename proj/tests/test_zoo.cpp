#include <doctest.h>

#include <numbers>

#include "nprox/measure.hpp"
#include "nprox/points.hpp"
#include "nprox/projector.hpp"
#include "nprox/zoo.hpp"
#include "support.hpp"

using namespace nprox;
using namespace nprox::testing;

TEST_CASE("Taylor is the truncated Taylor series") {
  const auto f = TestFunction::exp(AffineForm{{cplx(1.0)}, 0.0});
  const auto p = taylor({cplx(0.0)}, 9).apply(f);
  for (int k = 0; k <= 9; ++k) CHECK(rel_err(p.coeff(MultiIndex{k}), 1.0 / factorial(k)) < 1e-14);

  const auto g = TestFunction::exp(AffineForm{{cplx(1.0), cplx(1.0)}, 0.0});
  const auto q = taylor({cplx(0.0), cplx(0.0)}, 2).apply(g);
  CHECK(rel_err(q.coeff(MultiIndex{1, 1}), 1.0) < 1e-14);
  CHECK(rel_err(q.coeff(MultiIndex{2, 0}), 0.5) < 1e-14);

  // Expansion about a shifted center: p(a + h) = sum f^(k)(a) h^k / k!.
  const cplx a(0.3, -0.2);
  const auto pa = taylor({a}, 12).apply(f);
  const cplx h(0.05, 0.02);
  cplx s = 0.0;
  for (int k = 0; k <= 12; ++k) s += std::exp(a) * std::pow(h, k) / factorial(k);
  CHECK(rel_err(pa(Point{a + h}), s) < 1e-12);
}

TEST_CASE("Lagrange at Chebyshev points on a Runge-type function") {
  const auto f = TestFunction::reciprocal(AffineForm{{cplx(1.0)}, cplx(-2.0)});
  double prev = INFINITY;
  for (int d = 2; d <= 20; d += 2) {
    const auto p = lagrange(family_nodes("chebyshev", static_cast<std::size_t>(d) + 1)).apply(f);
    double err = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double x = -1.0 + 2.0 * i / 2000;
      err = std::max(err, std::abs(p(Point{x}) - 1.0 / (x - 2.0)));
    }
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("univariate Kergin is Newton interpolation") {
  const auto nodes = family_nodes("chebyshev", 7);
  std::vector<Point> pts;
  for (const auto& a : nodes) pts.push_back({a});
  const auto f = TestFunction::exp(AffineForm{{cplx(0.8)}, 0.0}) + TestFunction::reciprocal(AffineForm{{cplx(1.0)}, cplx(2.5)});
  CHECK(max_coeff_distance(kergin(pts, 6).apply(f), lagrange(nodes).apply(f)) < 1e-10);
}

TEST_CASE("bivariate Kergin interpolates at its nodes") {
  const std::vector<Point> nodes{{0.1, -0.2}, {0.7, 0.3}, {-0.4, 0.5}};
  const auto f = TestFunction::exp(AffineForm{{cplx(0.9), cplx(-0.6)}, 0.0}) *
                 TestFunction::reciprocal(AffineForm{{cplx(0.2), cplx(1.0)}, cplx(-3.0)});
  const auto p = kergin(nodes, 2).apply(f);
  for (const auto& z : nodes) CHECK(std::abs(p(z) - f(z)) < 1e-7);
}

TEST_CASE("Kergin with clustered nodes approaches Taylor") {
  const Point c{cplx(0.2), cplx(-0.1)};
  const double r = 1e-4;
  std::vector<Point> nodes;
  for (int i = 0; i <= 4; ++i) {
    const double t = 2 * std::numbers::pi * i / 5;
    nodes.push_back({c[0] + r * std::cos(t), c[1] + r * std::sin(t)});
  }
  const auto f = TestFunction::exp(AffineForm{{cplx(0.7), cplx(0.4)}, 0.0}) * TestFunction::exp(AffineForm{{cplx(0.3), cplx(-0.5)}, 0.0});
  const auto k = kergin(nodes, 4).apply(f);
  const auto t = taylor(c, 4).apply(f);
  CHECK(max_coeff_distance(k, t) < 1e-3);
  // Fully repeated nodes are allowed.
  const auto kr = kergin(std::vector<Point>(5, c), 4).apply(f);
  CHECK(max_coeff_distance(kr, t) < 1e-10);
}

TEST_CASE("orthogonal projection on the Chebyshev measure truncates the Chebyshev series") {
  const auto f = TestFunction::exp(AffineForm{{cplx(1.3)}, 0.2});
  const int d = 12;
  const auto p = orthogonal(chebyshev_measure(64), d).apply(f);
  // Reference Chebyshev coefficients from a 400-point Chebyshev-Gauss sum.
  const int big = 400;
  const auto t = chebyshev_t_coeffs(d);
  Polynomial ref(1, d);
  for (int k = 0; k <= d; ++k) {
    double ck = 0.0;
    for (int i = 0; i < big; ++i) {
      const double th = std::numbers::pi * (i + 0.5) / big;
      ck += std::exp(1.3 * std::cos(th) + 0.2) * std::cos(k * th);
    }
    ck *= (k == 0 ? 1.0 : 2.0) / big;
    for (int j = 0; j <= k; ++j) ref.coeffs()[static_cast<std::size_t>(j)] += ck * t[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
  }
  for (int i = 0; i <= 200; ++i) {
    const double x = -1.0 + i / 100.0;
    CHECK(std::abs(p(Point{x}) - ref(Point{x})) < 1e-10);
  }
}

TEST_CASE("orthogonal projection is the best L2 approximant") {
  Rng rng(41);
  const auto m = chebyshev_measure(40);
  const auto f = TestFunction::reciprocal(AffineForm{{cplx(1.0)}, cplx(-1.5)});
  const int d = 6;
  const auto p = orthogonal(m, d).apply(f);
  auto l2 = [&](const Polynomial& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < m->nodes.size(); ++i) s += m->weights[i] * std::norm(f(m->nodes[i]) - q(m->nodes[i]));
    return std::sqrt(s);
  };
  const double best = l2(p);
  for (int trial = 0; trial < 50; ++trial) {
    auto q = p;
    for (auto& c : q.coeffs()) c += cplx(uniform(rng, -1, 1), uniform(rng, -1, 1)) * std::pow(10.0, -uniform(rng, 0, 6));
    CHECK(best <= l2(q) + 1e-14);
  }
}

TEST_CASE("Lagrange product interpolates on the Bierman grid") {
  const int d = 9;
  const auto a = family_nodes("chebyshev", d + 1);
  const auto b = family_nodes("r_leja", d + 1);
  const auto prod = newton_product(lagrange(a), lagrange(b));
  const auto f = TestFunction::exp(AffineForm{{cplx(0.7), cplx(-1.1)}, 0.0}) + TestFunction::reciprocal(AffineForm{{cplx(1.0), cplx(1.0)}, cplx(-3.0)});
  const auto p = prod.apply(f);
  std::size_t count = 0;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j, ++count) {
      const Point z{a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]};
      CHECK(std::abs(p(z) - f(z)) < 1e-9);
    }
  }
  CHECK(count == monomial_count(2, d));
}

TEST_CASE("orthogonal product is orthogonal for the product measure") {
  const auto m1 = chebyshev_measure(24);
  const auto m2 = circle_measure(24);
  const int d = 8;
  const auto np = newton_product(orthogonal(m1, d), orthogonal(m2, d));
  const auto direct = orthogonal(product_measure(m1, m2), d);
  const auto f = TestFunction::exp(AffineForm{{cplx(0.6), cplx(0.5)}, 0.0});
  CHECK(max_coeff_distance(np.apply(f), direct.apply(f)) < 1e-10);
}

TEST_CASE("node families") {
  const auto c = family_nodes("chebyshev", 5, "natural");
  for (int k = 0; k < 5; ++k) CHECK(std::abs(c[static_cast<std::size_t>(k)] - std::cos((2 * k + 1) * std::numbers::pi / 10)) < 1e-15);
  const auto cl = family_nodes("chebyshev", 5);
  CHECK(cl.size() == 5);
  CHECK(std::abs(cl[0]) == doctest::Approx(std::cos(std::numbers::pi / 10)));
  const auto in = family_nodes("integer", 4);
  CHECK(in[3] == cplx(3.0));
  const auto r = family_nodes("r_leja", 6);
  CHECK(std::abs(r[0] - 1.0) < 1e-15);
  CHECK(std::abs(r[1] + 1.0) < 1e-15);
  CHECK(std::abs(r[2]) < 1e-15);
  CHECK_THROWS(family_nodes("unknown", 3));
}

TEST_CASE("projectors from JSON") {
  const auto spec = nlohmann::json::parse(R"({"kind":"product","left":{"kind":"lagrange","family":"chebyshev"},
                                              "right":{"kind":"taylor","center":[0.5]}})");
  CHECK(spec_nvars(spec) == 2);
  const auto p = projector_from_json(spec, 4);
  CHECK(p.nvars() == 2);
  CHECK(p.degree() == 4);
  const auto k = projector_from_json(nlohmann::json::parse(R"({"kind":"kergin","family":"leja_planar","degree":3})"));
  CHECK(k.nvars() == 2);
  const auto o = projector_from_json(nlohmann::json::parse(R"({"kind":"orthogonal","measure":{"kind":"circle","nodes":16},"degree":5})"));
  CHECK(o.degree() == 5);
  CHECK_THROWS(projector_from_json(nlohmann::json::parse(R"({"kind":"spline"})"), 2));
}
