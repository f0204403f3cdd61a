#include <doctest.h>

#include <algorithm>
#include <numbers>

#include "nprox/errors.hpp"
#include "nprox/measure.hpp"
#include "nprox/points.hpp"
#include "support.hpp"

using namespace nprox;
using namespace nprox::testing;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("recursive Leja points") {
  const auto s = leja_disk(16);
  REQUIRE(s.size() == 16);
  const auto v = s.scalars();
  CHECK(std::abs(v[0] - 1.0) < 1e-15);
  CHECK(std::abs(v[1] + 1.0) < 1e-15);
  CHECK(std::abs(v[2] - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(v[3] - cplx(0, -1)) < 1e-15);
  for (const auto& z : v) CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
  CHECK_THROWS_AS(leja_disk(5), std::invalid_argument);
  CHECK_THROWS_AS(leja_disk(1), std::invalid_argument);
}

TEST_CASE("greedy oracle") {
  const auto grid = circle_grid(100000);
  const auto g = leja_greedy_oracle(grid, 4).scalars();
  CHECK(std::abs(g[0] - 1.0) < 1e-12);
  CHECK(std::abs(g[1] + 1.0) < 1e-12);
  // The third point is +-i; either is a maximizer.
  CHECK(std::abs(std::abs(g[2].imag()) - 1.0) < 1e-12);
  CHECK(std::abs(g[3] + g[2]) < 1e-12);

  // Eight points from the 8-point grid are the 8th roots of unity.
  const auto r8 = leja_greedy_oracle(circle_grid(8), 8).scalars();
  std::vector<double> angles;
  for (const auto& z : r8) angles.push_back(std::fmod(std::arg(z) + 2 * kPi, 2 * kPi));
  std::sort(angles.begin(), angles.end());
  for (int k = 0; k < 8; ++k) CHECK(std::abs(angles[static_cast<std::size_t>(k)] - k * kPi / 4) < 1e-12);
}

TEST_CASE("Leja prefix property") {
  const auto grid = circle_grid(100000);
  const auto v = leja_disk(16).scalars();
  for (std::size_t k = 1; k < v.size(); ++k) {
    const std::vector<cplx> prev(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
    double best = -INFINITY;
    for (const auto& z : grid) best = std::max(best, log_distance_product(z, prev));
    const double mine = log_distance_product(v[k], prev);
    CHECK(std::abs(std::expm1(best - mine)) < 1e-6);
  }
}

TEST_CASE("real parts of the Leja sequence") {
  const auto r = r_leja(leja_disk(16)).scalars();
  const double c4 = std::cos(kPi / 4), c8 = std::cos(kPi / 8), s8 = std::cos(3 * kPi / 8);
  const std::vector<double> expect{1.0, -1.0, 0.0, c4, -c4, c8, -c8, -s8, s8};
  REQUIRE(r.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(std::abs(r[i].real() - expect[i]) < 1e-12);
    CHECK(r[i].imag() == 0.0);
  }
}

TEST_CASE("simple node families") {
  const auto c = chebyshev_nodes(1).scalars();
  CHECK(std::abs(c[0] - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(c[1] + std::sqrt(0.5)) < 1e-15);
  CHECK(integer_nodes(3).scalars() == std::vector<cplx>{0.0, 1.0, 2.0, 3.0});
  const auto e = equiangular(3).scalars();
  CHECK(std::abs(e[1] - cplx(0, 1)) < 1e-15);
  const auto p = planar(leja_disk(4));
  CHECK(p.dimension == 2);
  CHECK(std::abs(p.points[2][1] - 1.0) < 1e-15);
  CHECK(p.points[2][0].imag() == 0.0);
  // Leja ordering starts at the largest modulus.
  const auto lo = leja_order({cplx(0.1), cplx(-0.9), cplx(0.5)});
  CHECK(lo[0] == cplx(-0.9));
  CHECK(lo[1] == cplx(0.5));
}

TEST_CASE("quadrature exactness") {
  for (int m : {5, 8, 17}) {
    const auto circ = circle_measure(m);
    double w = 0.0;
    for (double x : circ->weights) w += x;
    CHECK(w == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(circ->exactness == m - 1);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; a + b <= m - 1; ++b) {
        std::vector<cplx> vals;
        for (const auto& z : circ->nodes) vals.push_back(std::pow(z[0], a) * std::pow(std::conj(z[0]), b));
        CHECK(std::abs(circ->integrate(vals) - (a == b ? 1.0 : 0.0)) < 1e-12);
      }
    }
    const auto cheb = chebyshev_measure(m);
    CHECK(cheb->exactness == 2 * m - 1);
    for (int k = 0; k <= 2 * m - 1; ++k) {
      std::vector<cplx> vals;
      for (const auto& z : cheb->nodes) vals.push_back(std::pow(z[0], k));
      // Arcsine moments: C(k, k/2) / 2^k for even k.
      const double exact = k % 2 ? 0.0 : static_cast<double>(binomial(k, k / 2)) / std::pow(2.0, k);
      CHECK(std::abs(cheb->integrate(vals) - exact) < 1e-12);
    }
  }
  const auto prod = product_measure(chebyshev_measure(6), circle_measure(9));
  CHECK(prod->nvars == 2);
  CHECK(prod->exactness == 8);
  CHECK(prod->nodes.size() == 54);
}

TEST_CASE("orthonormal bases") {
  const auto circ = gram_schmidt_basis(circle_measure(48), 20);
  for (int k = 0; k <= 20; ++k) CHECK(max_coeff_distance(circ.b[static_cast<std::size_t>(k)], Polynomial::monomial(MultiIndex{k}).with_degree_bound(20)) < 1e-12);

  const auto cheb = gram_schmidt_basis(chebyshev_measure(48), 20);
  const auto t = chebyshev_t_coeffs(20);
  for (int k = 0; k <= 20; ++k) {
    const double s = k == 0 ? 1.0 : std::sqrt(2.0);
    const auto& b = cheb.b[static_cast<std::size_t>(k)];
    for (int j = 0; j <= k; ++j) {
      const double want = s * t[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      CHECK(std::abs(b.coeffs()[static_cast<std::size_t>(j)] - want) < 1e-9 * std::max(1.0, std::abs(want)));
    }
  }
  for (int d = 1; d <= 20; ++d) {
    CHECK(gram_residual(gram_schmidt_basis(chebyshev_measure(d + 1), d)) < 1e-10);
    CHECK(gram_residual(gram_schmidt_basis(chebyshev_measure(64), d)) < 1e-10);
    CHECK(gram_residual(gram_schmidt_basis(circle_measure(2 * d + 1), d)) < 1e-10);
  }
  const auto& idx = graded_lex_indices(2, 10);
  const auto pm = gram_schmidt_basis(product_measure(chebyshev_measure(12), circle_measure(21)), 10);
  CHECK(gram_residual(pm) < 1e-10);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const auto lead = pm.b[r].coeff(idx[r]);
    CHECK(lead.real() > 0.0);
    CHECK(lead.imag() == 0.0);
  }
  CHECK_THROWS_AS(gram_schmidt_basis(circle_measure(4), 5), SingularGram);
}

TEST_CASE("product bases factor") {
  const auto m1 = circle_measure(25), m2 = chebyshev_measure(13);
  const int d = 12;
  const auto pb = gram_schmidt_basis(product_measure(m1, m2), d);
  const auto b1 = gram_schmidt_basis(m1, d), b2 = gram_schmidt_basis(m2, d);
  const auto& idx = graded_lex_indices(2, d);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const auto t = tensor_embed(b1.b[static_cast<std::size_t>(idx[r][0])], b2.b[static_cast<std::size_t>(idx[r][1])]);
    CHECK(max_coeff_distance(pb.b[r], t) < 1e-10);
  }
}

TEST_CASE("Bernstein-Markov diagnostic") {
  std::vector<Point> interval, circle;
  for (int i = 0; i <= 2000; ++i) interval.push_back({cplx(std::cos(kPi * i / 2000))});
  for (const auto& z : circle_grid(512)) circle.push_back({z});
  const auto c = bm_diagnostic(chebyshev_measure(64), interval, 30);
  // Grid scan of sqrt(2) |T_k| = sqrt(2) |cos(k theta)| on the same sample.
  for (const auto& row : c.rows) {
    double want = 0.0;
    for (int i = 0; i <= 2000; ++i) want = std::max(want, std::abs(std::cos(row.degree * kPi * i / 2000)));
    if (row.degree > 0) want *= std::sqrt(2.0);
    CHECK(row.max_sup == doctest::Approx(want).epsilon(1e-9));
    CHECK(row.max_sup <= (row.degree == 0 ? 1.0 : std::sqrt(2.0)) * (1 + 1e-9));
  }
  CHECK(c.rate <= 1.05);
  const auto u = bm_diagnostic(circle_measure(64), circle, 30);
  CHECK(u.rate == doctest::Approx(1.0).epsilon(1e-9));
}
