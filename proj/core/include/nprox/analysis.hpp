#pragma once

#include <memory>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nprox/points.hpp"
#include "nprox/polynomial.hpp"
#include "nprox/test_function.hpp"

namespace nprox {

/// Interval [-1, 1], closed unit disk, or a product of these.
struct CompactModel {
  enum class Kind { Interval, Disk, Product };
  Kind kind = Kind::Interval;
  std::vector<CompactModel> factors;

  static CompactModel interval();
  static CompactModel disk();
  static CompactModel product(std::vector<CompactModel> factors);

  int nvars() const;
  std::string name() const;
};

/// "interval", "disk", ["product", ...] / {"kind": "product", "factors": [...]}.
CompactModel compact_from_json(const nlohmann::json& j);

/// Green-Siciak extremal function V_K(z).
double extremal_value(const CompactModel& k, const Point& z);

/// m points (per factor for products) with V_K = ln R: circles of radius R,
/// Joukowski ellipses, and for products the distinguished boundary.
std::vector<Point> level_set_boundary(const CompactModel& k, double r, std::size_t m);

/// Deterministic sample of K with resolution m per dimension: Chebyshev
/// distributed on the interval, equiangular times radial on the disk,
/// tensor grids on products.
std::vector<Point> sample(const CompactModel& k, std::size_t m);

/// Points of K carrying the sup norm of polynomials (the interval, the unit
/// circle, or their product), m per factor.
std::vector<Point> sup_set_sample(const CompactModel& k, std::size_t m);

/// Sup norm of p on K: grid of m per factor, then local refinement.
double polynomial_sup(const Polynomial& p, const CompactModel& k, std::size_t m);

/// sampled ||p||_{K_R} / (R^deg p ||p||_K).
double bws_check(const Polynomial& p, const CompactModel& k, double r, std::size_t m_k = 512, std::size_t m_r = 512);

/// Throws PoleError when a pole of f meets K.
void check_poles_on(const TestFunction& f, const CompactModel& k);

struct RateFit {
  double slope = 0.0;         ///< of log e_d against d
  double slope_stderr = 0.0;
  double rate = 0.0;          ///< exp(slope)
  std::vector<int> used;      ///< degrees entering the regression
};

/// Log-linear least squares over the tail half of the degrees whose errors
/// stay above `floor`. Fewer than two usable points gives rate 0.
RateFit fit_geometric_rate(const std::vector<int>& degrees, const std::vector<double>& errors, double floor);

struct RhoEstimate {
  std::vector<int> degrees;
  std::vector<double> errors;
  RateFit fit;
  double rho = 0.0;  ///< 1 / rate; infinity when errors reach the floor
  double rho_low = 0.0;
  double rho_high = 0.0;
};

/// rho(f) on K from orthogonal projections (Chebyshev measure on intervals,
/// circle measure on disks, Newton products on products) at degrees 0..dmax.
RhoEstimate rho_estimate(const TestFunction& f, const CompactModel& k, int dmax, int measure_nodes = -1,
                         std::size_t grid = 256);

/// Norms on C^n used for growth classes.
struct NormSpec {
  enum class Kind { Linf, L1, L2, WeightedSum, PowerCombined };
  Kind kind = Kind::Linf;
  /// Composite norms: a1 N1(z1) + a2 N2(z2) or (a1 N1^w + a2 N2^w)^(1/w),
  /// z1 the first `split` coordinates.
  int split = 0;
  double a1 = 1.0, a2 = 1.0, omega = 1.0;
  std::shared_ptr<const NormSpec> left, right;

  static NormSpec linf();
  static NormSpec l1();
  static NormSpec l2();
  static NormSpec weighted_sum(NormSpec n1, NormSpec n2, int split, double a1, double a2);
  static NormSpec power_combined(NormSpec n1, NormSpec n2, int split, double a1, double a2, double omega);
};

NormSpec norm_from_json(const nlohmann::json& j);

double norm_value(const NormSpec& n, std::span<const cplx> z);

/// max{|z^alpha| : N(z) <= 1}.
double delta_N(const MultiIndex& alpha, const NormSpec& n);

/// sup_z |z^alpha| exp(-A N(z)^omega) = delta_N(alpha) (|alpha| / (e omega A))^(|alpha| / omega).
double growth_norm_monomial(const MultiIndex& alpha, double omega, double a, const NormSpec& n);

/// Sampled M_N(f, r) = sup{|f(z)| : N(z) = r} over m deterministic points.
double sup_on_norm_sphere(const TestFunction& f, const NormSpec& n, double r, std::size_t m = 512);

struct CoefficientBound {
  MultiIndex alpha;
  double coeff_abs;
  double bound;
  bool holds;
};

/// t^{-|alpha|} M / delta_N(alpha).
double coefficient_bound(const MultiIndex& alpha, const NormSpec& n, double t, double m);

/// Checks |a_alpha| <= t^{-|alpha|} M_N(f, t) / delta_N(alpha) for every
/// coefficient of f, with M sampled.
std::vector<CoefficientBound> power_series_coeff_bound(const Polynomial& f, const NormSpec& n, double t,
                                                       std::size_t m = 512);

/// c(omega) = int_0^{1/2} t^{omega - 1} / (1 - t) dt.
double gelfond_constant(double omega);

/// min over a log-spaced grid r in [sqrt(rmax), rmax] of #{j : N(a_j) <= r} / r^omega.
double omega_density(const PointSequence& points, const NormSpec& n, double omega, double rmax, std::size_t grid = 400);

}  // namespace nprox
