#pragma once

#include <vector>

#include "nprox/polynomial.hpp"

namespace nprox {

/// exp[u_0], exp[u_0,u_1], ..., exp[u_0..u_k] (all prefix divided differences),
/// from the first row of the exponential of the bidiagonal matrix with
/// diagonal u and unit superdiagonal. Accurate to relative precision
/// for real nodes; nodes may repeat.
std::vector<cplx> exp_divided_differences(const std::vector<cplx>& u);

/// Prefix divided differences of s -> 1/s. Throws PoleError when 0 lies in
/// the convex hull of the nodes.
std::vector<cplx> reciprocal_divided_differences(const std::vector<cplx>& u);

/// Prefix divided differences of s -> s^n: the complete homogeneous symmetric
/// polynomial h_{n-j}(u_0..u_j).
std::vector<cplx> power_divided_differences(const std::vector<cplx>& u, int n);

/// Newton table divided differences f[x_0..x_j] from values f(x_i), distinct nodes.
std::vector<cplx> newton_divided_differences(const std::vector<cplx>& x, const std::vector<cplx>& fx);

/// True when 0 lies in the closed convex hull of the given complex numbers
/// (within tol of it).
bool hull_contains_zero(const std::vector<cplx>& u, double tol = 1e-14);

}  // namespace nprox
