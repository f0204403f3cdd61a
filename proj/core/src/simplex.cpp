#include "nprox/simplex.hpp"

#include <cmath>
#include <stdexcept>

#include "nprox/errors.hpp"

namespace nprox {

double simplex_monomial_moment(const MultiIndex& beta) {
  const int k = beta.nvars();
  double lg = -std::lgamma(beta.degree() + k + 1.0);
  for (int b : beta.exponents()) lg += std::lgamma(b + 1.0);
  return std::exp(lg);
}

double dirichlet_moment(const MultiIndex& m) {
  const int k = m.nvars() - 1;
  double lg = -std::lgamma(m.degree() + k + 1.0);
  for (int b : m.exponents()) lg += std::lgamma(b + 1.0);
  return std::exp(lg);
}

std::size_t grundmann_moller_size(int k, int s) {
  std::size_t total = 0;
  for (int i = 0; i <= s; ++i) total += homogeneous_count(k + 1, s - i);
  return total;
}

std::vector<SimplexNode> grundmann_moller(int k, int s) {
  if (k < 0 || s < 0) throw std::invalid_argument("grundmann_moller needs k >= 0, s >= 0");
  if (k == 0) return {SimplexNode{1.0, {1.0}}};
  const int d = 2 * s + 1;
  std::vector<SimplexNode> rule;
  rule.reserve(grundmann_moller_size(k, s));
  for (int i = 0; i <= s; ++i) {
    const double denom = d + k - 2 * i;
    const double lw = d * std::log(denom) - 2.0 * s * std::log(2.0) - std::lgamma(i + 1.0) - std::lgamma(d + k - i + 1.0);
    const double w = (i % 2 == 0 ? 1.0 : -1.0) * std::exp(lw);
    for (const auto& beta : indices_of_degree(k + 1, s - i)) {
      std::vector<double> bary(static_cast<std::size_t>(k + 1));
      for (int j = 0; j <= k; ++j) bary[static_cast<std::size_t>(j)] = (2.0 * beta[j] + 1.0) / denom;
      rule.push_back(SimplexNode{w, std::move(bary)});
    }
  }
  return rule;
}

std::vector<cplx> simplex_affine_moments(const std::vector<Point>& nodes, int maxdeg) {
  if (nodes.empty()) throw std::invalid_argument("simplex_affine_moments needs at least one node");
  const int n = static_cast<int>(nodes[0].size());
  for (const auto& z : nodes) {
    if (static_cast<int>(z.size()) != n) throw DimensionMismatch("simplex nodes of different dimension");
  }
  const int k = static_cast<int>(nodes.size()) - 1;
  const auto& idx = graded_lex_indices(n, maxdeg);
  const std::size_t count = idx.size();

  // G_i(beta) = |beta|!/beta! z_i^beta; H = G_0 * G_1 * ... (multi-index convolution).
  // Then the moment is beta!/(|beta|+k)! H(beta).
  std::vector<double> multinom(count);
  for (std::size_t r = 0; r < count; ++r) multinom[r] = factorial(idx[r].degree()) / factorial(idx[r]);
  auto term = [&](const Point& z) {
    auto v = monomial_values_at(z, maxdeg);
    for (std::size_t r = 0; r < count; ++r) v[r] *= multinom[r];
    return v;
  };

  std::vector<cplx> h = term(nodes[0]);
  for (int i = 1; i <= k; ++i) {
    const auto g = term(nodes[static_cast<std::size_t>(i)]);
    std::vector<cplx> next(count, cplx(0.0));
    for (std::size_t a = 0; a < count; ++a) {
      if (h[a] == cplx(0.0)) continue;
      for (std::size_t b = 0; b < count; ++b) {
        if (idx[a].degree() + idx[b].degree() > maxdeg) break;
        next[graded_lex_rank(idx[a] + idx[b])] += h[a] * g[b];
      }
    }
    h = std::move(next);
  }
  for (std::size_t r = 0; r < count; ++r) {
    const double lg = -std::lgamma(idx[r].degree() + k + 1.0);
    h[r] *= factorial(idx[r]) * std::exp(lg);
  }
  return h;
}

}  // namespace nprox
