#include <doctest.h>

#include "nprox/errors.hpp"
#include "nprox/measure.hpp"
#include "nprox/points.hpp"
#include "nprox/projector.hpp"
#include "nprox/zoo.hpp"
#include "support.hpp"

using namespace nprox;
using namespace nprox::testing;

namespace {

TestFunction smooth1(double s = 1.0) {
  return TestFunction::exp(AffineForm{{cplx(0.6 * s)}, 0.1}) + TestFunction::reciprocal(AffineForm{{cplx(1.0)}, cplx(-3.0)});
}

TestFunction smooth2() {
  return TestFunction::exp(AffineForm{{cplx(0.5), cplx(-0.3)}, 0.0}) +
         TestFunction::reciprocal(AffineForm{{cplx(0.4), cplx(0.3)}, cplx(-2.0)});
}

std::vector<cplx> cheb_leja(std::size_t count) { return family_nodes("chebyshev", count); }

std::vector<Point> leja_prefix(std::size_t count) {
  std::size_t m = 2;
  while (m < count) m *= 2;
  auto pts = leja_disk(m).points;
  pts.resize(count);
  return pts;
}

std::vector<Point> generic_planar(std::size_t count) {
  std::vector<Point> nodes;
  for (const auto& z : leja_prefix(count)) nodes.push_back({cplx(0.8 * z[0].real()), cplx(0.8 * z[0].imag())});
  return nodes;
}

void check_laws(const NewtonProjector& p, const TestFunction& f, Rng& rng, double tol = 1e-9) {
  const auto pf = p.apply(f);
  const auto ppf = p.apply(pf);
  const double scale = std::max(1.0, pf.max_abs_coeff());
  CHECK(max_coeff_distance(ppf, pf) < tol * scale);
  const auto q = random_polynomial(rng, p.nvars(), p.degree());
  CHECK(max_coeff_distance(p.apply(q), q) < tol * std::max(1.0, q.max_abs_coeff()));
  const auto cf = p.conditions(f);
  const auto cp = p.conditions(pf);
  double cs = 1.0;
  for (const auto& c : cf) cs = std::max(cs, std::abs(c));
  for (std::size_t i = 0; i < cf.size(); ++i) CHECK(std::abs(cf[i] - cp[i]) < 1e-8 * cs);
}

}  // namespace

TEST_CASE("build validates level structure") {
  // Kergin at three planar points, degree 2: builds with invertible leading blocks.
  const auto k = kergin({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, 2);
  REQUIRE(k.level_conditions().size() == 3);
  for (double c : k.level_conditions()) CHECK(c < 1e12);
  CHECK(k.matrix().rows() == 6);

  Levels wrong{{point_eval({0.0})}, {point_eval({1.0}), point_eval({2.0})}};
  CHECK_THROWS_AS(NewtonProjector::build(wrong), std::invalid_argument);
  // Repeated point evaluations make the degree-1 block singular.
  Levels singular{{point_eval({0.5})}, {point_eval({0.5})}};
  CHECK_THROWS_AS(NewtonProjector::build(singular), NestedUnisolvenceFailure);
  try {
    NewtonProjector::build(singular);
  } catch (const NestedUnisolvenceFailure& e) {
    CHECK(e.level() == 1);
  }
  CHECK_THROWS_AS(lagrange({cplx(0.0), cplx(1.0), cplx(0.0)}), std::invalid_argument);
}

TEST_CASE("Lagrange interpolates") {
  const auto p = lagrange({cplx(0.0), cplx(1.0), cplx(2.0)});
  const auto f = TestFunction::exp(AffineForm{{cplx(1.0)}, 0.0});
  const auto pf = p.apply(f);
  for (double a : {0.0, 1.0, 2.0}) CHECK(std::abs(pf(Point{a}) - std::exp(a)) < 1e-10);
}

TEST_CASE("truncation equals rebuilding on the node prefix") {
  Rng rng(31);
  const auto nodes = cheb_leja(11);
  const auto full = lagrange(nodes);
  const auto f = smooth1();
  for (int j = 0; j <= 10; ++j) {
    const auto t = full.truncate(j);
    CHECK(t.degree() == j);
    const auto rebuilt = lagrange(nodes, j);
    CHECK(max_coeff_distance(t.apply(f), rebuilt.apply(f)) < 1e-9);
  }
  const auto k = kergin(generic_planar(5), 4);
  const auto f2 = smooth2();
  for (int j = 0; j <= 4; ++j) {
    const auto rebuilt = kergin(generic_planar(5), j);
    CHECK(max_coeff_distance(k.truncate(j).apply(f2), rebuilt.apply(f2)) < 1e-9);
  }
}

TEST_CASE("Newton summands") {
  const auto nodes = cheb_leja(8);
  const auto p = lagrange(nodes);
  const auto f = smooth1();
  std::vector<cplx> fx;
  for (const auto& a : nodes) fx.push_back(f(Point{a}));
  const auto summands = p.newton_summands(f);
  REQUIRE(summands.size() == 8);
  Polynomial acc(1, 7);
  for (std::size_t k = 0; k < summands.size(); ++k) {
    // pi_k = f[a_0..a_k] prod_{i<k} (x - a_i)
    Polynomial w = Polynomial::constant(1, divided_difference(nodes, fx, 0, k));
    for (std::size_t i = 0; i < k; ++i) {
      Polynomial lin(1, 1, {-nodes[i], cplx(1.0)});
      w = w * lin;
    }
    CHECK(max_coeff_distance(summands[k], w.with_degree_bound(7)) < 1e-9);
    CHECK(max_coeff_distance(p.newton_summand(static_cast<int>(k), f), summands[k]) < 1e-12);
    acc = acc + summands[k];
  }
  CHECK(max_coeff_distance(acc, p.apply(f)) < 1e-12);
}

TEST_CASE("projector laws on the zoo") {
  Rng rng(32);
  for (int n = 1; n <= 3; ++n) {
    Point a(static_cast<std::size_t>(n), cplx(0.1));
    const auto f = n == 1 ? smooth1() : TestFunction::exp(AffineForm{std::vector<cplx>(static_cast<std::size_t>(n), cplx(0.3)), 0.0});
    for (int d = 0; d <= 6; ++d) check_laws(taylor(a, d), f, rng);
  }
  for (int d = 0; d <= 8; ++d) {
    check_laws(lagrange(cheb_leja(static_cast<std::size_t>(d) + 1)), smooth1(), rng);
    check_laws(lagrange(family_nodes("equiangular", static_cast<std::size_t>(d) + 1)), smooth1(0.5), rng);
    check_laws(kergin(generic_planar(static_cast<std::size_t>(d) + 1), d), smooth2(), rng);
    check_laws(orthogonal(chebyshev_measure(32), d), smooth1(), rng);
    check_laws(orthogonal(circle_measure(32), d), smooth1(0.5), rng);
  }
}

TEST_CASE("Newton product") {
  Rng rng(33);
  const auto t1 = taylor({cplx(0.2)}, 5);
  const auto t2 = taylor({cplx(-0.1), cplx(0.3)}, 5);
  const auto prod = newton_product(t1, t2);
  CHECK(prod.nvars() == 3);
  CHECK(prod.degree() == 5);
  for (std::size_t i = 0; i < prod.levels().size(); ++i) CHECK(prod.levels()[i].size() == homogeneous_count(3, static_cast<int>(i)));
  const auto direct = taylor({cplx(0.2), cplx(-0.1), cplx(0.3)}, 5);
  const auto f = TestFunction::exp(AffineForm{{cplx(0.4), cplx(0.3), cplx(-0.5)}, 0.0});
  CHECK(max_coeff_distance(prod.apply(f), direct.apply(f)) < 1e-12);

  // Nestedness: truncating the product equals the product of truncations.
  const auto l1 = lagrange(cheb_leja(7));
  const auto l2 = lagrange(family_nodes("equiangular", 7));
  const auto lp = newton_product(l1, l2);
  const auto g = TestFunction::exp(AffineForm{{cplx(0.5), cplx(0.25)}, 0.0});
  for (int j = 0; j <= 6; ++j) {
    const auto a = lp.truncate(j).apply(g);
    const auto b = newton_product(l1.truncate(j), l2.truncate(j)).apply(g);
    CHECK(max_coeff_distance(a, b) < 1e-9);
  }
}

TEST_CASE("product formula") {
  Rng rng(34);
  const auto l1 = lagrange(cheb_leja(6));
  const auto k2 = kergin(generic_planar(6), 5);
  const auto prod = newton_product(l1, k2);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f1 = TestFunction::exp(AffineForm{{cplx(uniform(rng, -1, 1))}, 0.0});
    const auto f2 = TestFunction::reciprocal(AffineForm{{cplx(uniform(rng, -0.5, 0.5)), cplx(uniform(rng, -0.5, 0.5))}, cplx(-2.0)});
    const auto generic = prod.apply(TestFunction::tensor(f1, f2));
    const auto formula = apply_product_formula(l1, k2, f1, f2);
    CHECK(max_coeff_distance(generic, formula) < 1e-8 * std::max(1.0, generic.max_abs_coeff()));
  }
}

TEST_CASE("B sets") {
  for (int d = 0; d <= 6; ++d) {
    for (int a = 0; a <= 8; ++a) {
      for (int b = 0; b <= 8; ++b) {
        const BSet s(d, a, b);
        std::size_t count = 0;
        for (int i = 0; i <= a; ++i) {
          for (int j = 0; j <= b; ++j) {
            const bool in = d + 1 <= i + j;
            CHECK(s.contains(i, j) == in);
            count += in ? 1 : 0;
          }
        }
        CHECK(s.cardinality() == count);
        CHECK(s.pairs().size() == count);
        CHECK(s.cardinality() <= static_cast<std::size_t>((a + 1) * (b + 1)));
      }
    }
  }
}

TEST_CASE("residual expansion") {
  Rng rng(35);
  const int d = 4;
  const auto l1 = lagrange(cheb_leja(8));
  const auto l2 = lagrange(family_nodes("equiangular", 8));
  const auto pa = random_polynomial(rng, 1, 3);
  const auto pb = random_polynomial(rng, 1, 3);
  const auto pd = newton_product(l1.truncate(d), l2.truncate(d));
  const auto prod = tensor_embed(pa, pb);
  const auto direct = prod - pd.apply(prod).with_degree_bound(prod.degree_bound());
  const auto expansion = residual_expansion(l1, l2, d, pa, pb);
  CHECK(max_coeff_distance(direct, expansion) < 1e-8);
}

TEST_CASE("solve on prefixes") {
  const auto p = lagrange(cheb_leja(5));
  const auto f = smooth1();
  const auto rhs = p.conditions(f);
  for (int j = 0; j <= 4; ++j) CHECK(max_coeff_distance(p.solve(rhs, j), p.truncate(j).apply(f)) < 1e-12);
  CHECK_THROWS(p.solve(std::vector<cplx>(2, 0.0)));
}
