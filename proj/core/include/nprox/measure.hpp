#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nprox/polynomial.hpp"

namespace nprox {

/// Discrete probability measure: sum_i w_i f(x_i). `exactness` is the degree
/// up to which it reproduces the continuous measure it discretizes
/// (in z^a conj(z)^b total degree for the circle).
struct QuadratureMeasure {
  std::string domain;
  int nvars = 1;
  std::vector<Point> nodes;
  std::vector<double> weights;
  int exactness = 0;

  cplx integrate(const std::vector<cplx>& values_at_nodes) const;
};

using MeasurePtr = std::shared_ptr<const QuadratureMeasure>;

/// Normalized arc length on the unit circle at m equiangular nodes; exact to degree m - 1.
MeasurePtr circle_measure(int m);
/// Arcsine measure dx / (pi sqrt(1 - x^2)) on [-1, 1] via m Chebyshev-Gauss nodes; exact to degree 2m - 1.
MeasurePtr chebyshev_measure(int m);
/// Tensor product of two measures; exactness is the smaller of the two.
MeasurePtr product_measure(const MeasurePtr& a, const MeasurePtr& b);

/// Orthonormal polynomials b_alpha, |alpha| <= degree, in graded-lex order.
struct OrthonormalBasis {
  MeasurePtr measure;
  int degree = 0;
  std::vector<Polynomial> b;
};

/// Gram-Schmidt on the monomials (two passes) in L^2(measure). The leading
/// coefficient of b_alpha at z^alpha is real positive.
OrthonormalBasis gram_schmidt_basis(const MeasurePtr& m, int d);

/// max |<b_a, b_b> - delta_ab| computed with the measure's quadrature.
double gram_residual(const OrthonormalBasis& basis);

struct BmRow {
  int degree;
  double max_sup;
};

struct BmDiagnostic {
  std::vector<BmRow> rows;
  /// exp of the fitted slope of log max_sup against degree.
  double rate;
};

/// Per-degree max over |alpha| = k of the sampled sup norm of b_alpha on `grid`.
BmDiagnostic bm_diagnostic(const MeasurePtr& m, const std::vector<Point>& grid, int dmax);

}  // namespace nprox
