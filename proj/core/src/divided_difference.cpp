#include "nprox/divided_difference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nprox/errors.hpp"

namespace nprox {

namespace {

using Matrix = std::vector<std::vector<cplx>>;

// Upper triangular product.
Matrix upper_product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<cplx>(n, cplx(0.0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = i; l < n; ++l) {
      const cplx x = a[i][l];
      if (x == cplx(0.0)) continue;
      for (std::size_t j = l; j < n; ++j) c[i][j] += x * b[l][j];
    }
  }
  return c;
}

}  // namespace

std::vector<cplx> exp_divided_differences(const std::vector<cplx>& u) {
  const std::size_t n = u.size();
  if (n == 0) return {};
  bool real = true;
  for (const auto& v : u) real = real && v.imag() == 0.0;
  // Shifting by the minimum keeps every entry nonnegative for real nodes.
  cplx shift = 0.0;
  if (real) {
    double m = u[0].real();
    for (const auto& v : u) m = std::min(m, v.real());
    shift = m;
  } else {
    for (const auto& v : u) shift += v;
    shift /= static_cast<double>(n);
  }
  double spread = 1.0;
  for (const auto& v : u) spread = std::max(spread, std::abs(v - shift));
  const int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(spread))) + 1);
  const double h = std::ldexp(1.0, -squarings);

  std::vector<cplx> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = (u[i] - shift) * h;

  // Taylor series of B = h (A - shift I); B is bidiagonal so B^p is cheap.
  Matrix sum(n, std::vector<cplx>(n, cplx(0.0)));
  Matrix term(n, std::vector<cplx>(n, cplx(0.0)));
  for (std::size_t i = 0; i < n; ++i) term[i][i] = sum[i][i] = 1.0;
  for (int p = 1; p < 400; ++p) {
    Matrix next(n, std::vector<cplx>(n, cplx(0.0)));
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        cplx v = term[i][j] * diag[j];
        if (j > i) v += term[i][j - 1] * h;
        v /= static_cast<double>(p);
        next[i][j] = v;
        sum[i][j] += v;
        if (sum[i][j] != cplx(0.0)) worst = std::max(worst, std::abs(v) / std::abs(sum[i][j]));
        else if (v != cplx(0.0)) worst = 1.0;
      }
    }
    term = std::move(next);
    if (p > static_cast<int>(n) && worst < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = upper_product(sum, sum);

  const cplx scale = std::exp(shift);
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = sum[0][j] * scale;
  return out;
}

bool hull_contains_zero(const std::vector<cplx>& u, double tol) {
  if (u.empty()) return false;
  std::vector<double> angles;
  for (const auto& v : u) {
    if (std::abs(v) <= tol) return true;
    angles.push_back(std::arg(v));
  }
  std::sort(angles.begin(), angles.end());
  // Zero is outside the hull iff all arguments fit in an open half plane,
  // i.e. some gap between consecutive arguments exceeds pi.
  double gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
  return gap <= std::numbers::pi + 1e-12;
}

std::vector<cplx> reciprocal_divided_differences(const std::vector<cplx>& u) {
  if (hull_contains_zero(u)) throw PoleError("s = 0", "convex hull of divided-difference nodes");
  std::vector<cplx> out(u.size());
  cplx prod = 1.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    prod *= u[j];
    out[j] = (j % 2 == 0 ? 1.0 : -1.0) / prod;
  }
  return out;
}

std::vector<cplx> power_divided_differences(const std::vector<cplx>& u, int n) {
  if (n < 0) throw std::invalid_argument("power_divided_differences needs n >= 0");
  // h[m] holds h_m(u_0..u_j) for the current prefix j.
  std::vector<cplx> h(static_cast<std::size_t>(n) + 1, cplx(0.0));
  std::vector<cplx> out(u.size(), cplx(0.0));
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (j == 0) {
      cplx p = 1.0;
      for (int m = 0; m <= n; ++m) {
        h[static_cast<std::size_t>(m)] = p;
        p *= u[0];
      }
    } else {
      for (int m = 1; m <= n; ++m) h[static_cast<std::size_t>(m)] += u[j] * h[static_cast<std::size_t>(m - 1)];
    }
    const int m = n - static_cast<int>(j);
    out[j] = m >= 0 ? h[static_cast<std::size_t>(m)] : cplx(0.0);
  }
  return out;
}

std::vector<cplx> newton_divided_differences(const std::vector<cplx>& x, const std::vector<cplx>& fx) {
  if (x.size() != fx.size()) throw DimensionMismatch("nodes and values differ in length");
  std::vector<cplx> t = fx;
  std::vector<cplx> out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    out.push_back(t[j]);
    for (std::size_t i = x.size(); i-- > j + 1;) {
      const cplx den = x[i] - x[i - j - 1];
      if (den == cplx(0.0)) throw std::invalid_argument("repeated node in Newton table");
      t[i] = (t[i] - t[i - 1]) / den;
    }
  }
  return out;
}

}  // namespace nprox
