#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "nprox/multi_index.hpp"
#include "nprox/polynomial.hpp"

namespace nprox::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline cplx random_complex(Rng& rng, double radius = 1.0) {
  return {uniform(rng, -radius, radius), uniform(rng, -radius, radius)};
}

inline Point random_point(Rng& rng, int n, double radius = 1.0) {
  Point z(static_cast<std::size_t>(n));
  for (auto& c : z) c = random_complex(rng, radius);
  return z;
}

/// Point in the unit polydisk.
inline Point random_polydisk_point(Rng& rng, int n) {
  Point z(static_cast<std::size_t>(n));
  for (auto& c : z) c = std::polar(std::sqrt(uniform(rng, 0, 1)), uniform(rng, 0, 2 * M_PI));
  return z;
}

inline Polynomial random_polynomial(Rng& rng, int n, int d, bool real = false) {
  Polynomial p(n, d);
  for (auto& c : p.coeffs()) c = real ? cplx(uniform(rng, -1, 1)) : random_complex(rng);
  return p;
}

/// sum_alpha c_alpha prod z_i^alpha_i, one term at a time with std::pow.
inline cplx naive_eval(const Polynomial& p, const Point& z) {
  const auto& idx = graded_lex_indices(p.nvars(), p.degree_bound());
  cplx s = 0.0;
  for (std::size_t r = 0; r < idx.size(); ++r) {
    cplx t = p.coeffs()[r];
    for (int i = 0; i < p.nvars(); ++i) t *= std::pow(z[static_cast<std::size_t>(i)], idx[r][i]);
    s += t;
  }
  return s;
}

/// Composite Gauss-Legendre on [a, b] with `panels` panels of 8 points.
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b, int panels = 16) {
  static const double x[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
  static const double w[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
  const double h = (b - a) / panels;
  double s = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h, half = 0.5 * h;
    for (int i = 0; i < 4; ++i) s += half * w[i] * (f(mid - half * x[i]) + f(mid + half * x[i]));
  }
  return s;
}

/// Complex version of gauss_legendre.
inline cplx gauss_legendre_c(const std::function<cplx(double)>& f, double a, double b, int panels = 16) {
  return {gauss_legendre([&](double t) { return f(t).real(); }, a, b, panels),
          gauss_legendre([&](double t) { return f(t).imag(); }, a, b, panels)};
}

/// Monomial coefficients of T_0..T_d by the three-term recurrence.
inline std::vector<std::vector<double>> chebyshev_t_coeffs(int d) {
  std::vector<std::vector<double>> t{{1.0}};
  if (d >= 1) t.push_back({0.0, 1.0});
  for (int k = 2; k <= d; ++k) {
    std::vector<double> next(static_cast<std::size_t>(k) + 1, 0.0);
    for (int j = 0; j < k; ++j) next[static_cast<std::size_t>(j) + 1] += 2.0 * t[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(j)];
    for (int j = 0; j + 1 < k; ++j) next[static_cast<std::size_t>(j)] -= t[static_cast<std::size_t>(k) - 2][static_cast<std::size_t>(j)];
    t.push_back(std::move(next));
  }
  return t;
}

/// Recursive divided differences f[x_i..x_j] from scratch.
inline cplx divided_difference(const std::vector<cplx>& x, const std::vector<cplx>& fx, std::size_t i, std::size_t j) {
  if (i == j) return fx[i];
  return (divided_difference(x, fx, i + 1, j) - divided_difference(x, fx, i, j - 1)) / (x[j] - x[i]);
}

/// Golden-section maximization of a unimodal g on [a, b].
inline double golden_max(const std::function<double(double)>& g, double a, double b, int iters = 200) {
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double gc = g(c), gd = g(d);
  for (int i = 0; i < iters; ++i) {
    if (gc > gd) {
      b = d; d = c; gd = gc; c = b - phi * (b - a); gc = g(c);
    } else {
      a = c; c = d; gc = gd; d = a + phi * (b - a); gd = g(d);
    }
  }
  return std::max(gc, gd);
}

inline double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace nprox::testing
