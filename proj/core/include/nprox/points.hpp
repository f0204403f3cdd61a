#pragma once

#include <string>
#include <vector>

#include "nprox/polynomial.hpp"

namespace nprox {

/// Ordered interpolation nodes. The order defines the Newton structure.
struct PointSequence {
  int dimension = 1;
  std::vector<Point> points;
  std::string provenance;

  std::size_t size() const { return points.size(); }
  /// First coordinates, for univariate sequences.
  std::vector<cplx> scalars() const;
};

PointSequence make_sequence(const std::vector<cplx>& values, std::string provenance);

/// Recursive Leja sequence on the unit circle: S_1 = (1, -1) and
/// S_{2^{n+1}} = (S_{2^n}, rho_n S_{2^n}) with rho_n = exp(i pi / 2^n).
PointSequence leja_disk(std::size_t count);

/// Greedy maximizer of sum_j log|z - a_j| over `sample`. The first point is
/// the max-modulus sample point of smallest argument in [0, 2 pi).
PointSequence leja_greedy_oracle(const std::vector<cplx>& sample, std::size_t count);

/// Reorders `values` greedily (Leja order) starting from the largest modulus.
std::vector<cplx> leja_order(const std::vector<cplx>& values);

/// Real parts of a unit-circle sequence, in order, with repeats removed.
PointSequence r_leja(const PointSequence& leja, double tol = 1e-12);

/// cos((2k + 1) pi / (2d + 2)), k = 0..d.
PointSequence chebyshev_nodes(int d);
/// 0, 1, ..., d.
PointSequence integer_nodes(int d);
/// exp(2 pi i k / (d + 1)), k = 0..d.
PointSequence equiangular(int d);

/// Complex numbers x + iy read as real points (x, y) in two variables.
PointSequence planar(const PointSequence& seq);

/// sum_j log|z - a_j|.
double log_distance_product(cplx z, const std::vector<cplx>& previous);

/// m equally spaced points on the unit circle starting at 1.
std::vector<cplx> circle_grid(std::size_t m);

}  // namespace nprox
