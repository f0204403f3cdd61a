#pragma once

#include <vector>

#include "nprox/multi_index.hpp"
#include "nprox/polynomial.hpp"

namespace nprox {

/// Integral of t^beta over the standard simplex S_k = {t >= 0, sum t <= 1} in
/// k = beta.nvars() dimensions: beta! / (|beta| + k)!.
double simplex_monomial_moment(const MultiIndex& beta);

/// Integral over S_k of the barycentric monomial lambda^m, with
/// lambda_0 = 1 - sum t and m of length k + 1: m! / (|m| + k)!.
double dirichlet_moment(const MultiIndex& m);

/// One node of a simplex rule in barycentric coordinates (k + 1 entries).
struct SimplexNode {
  double weight;
  std::vector<double> bary;
};

/// Grundmann-Moller rule on S_k exact for polynomials of degree 2s + 1.
/// Weights sum to 1/k!. For k = 0 the rule is a single unit node.
std::vector<SimplexNode> grundmann_moller(int k, int s);

/// Number of nodes grundmann_moller(k, s) returns.
std::size_t grundmann_moller_size(int k, int s);

/// Values of int_{S_k} (sum_i lambda_i z_i)^beta dt for all |beta| <= maxdeg,
/// indexed by graded-lex rank in the ambient dimension, with k = nodes.size() - 1.
std::vector<cplx> simplex_affine_moments(const std::vector<Point>& nodes, int maxdeg);

}  // namespace nprox
