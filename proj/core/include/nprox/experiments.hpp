#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nprox/analysis.hpp"

namespace nprox {

struct ExperimentConfig {
  nlohmann::json projector;
  nlohmann::json function;
  CompactModel compact;
  std::size_t grid = 64;
  std::vector<int> degrees;
  std::uint64_t seed = 0;
  /// Wall time goes into the CSV only when set; otherwise the column is 0
  /// so that reports are byte-identical across runs.
  bool record_timing = false;
  /// 1/rho(f) is compared with the fitted rate when known.
  std::optional<double> reference_rho;
  nlohmann::json raw;

  static ExperimentConfig from_json(const nlohmann::json& j);
};

struct DegreeRecord {
  int d = 0;
  double sup_error = 0.0;
  double root_error = 0.0;
  double seconds = 0.0;
};

struct ExperimentReport {
  std::string name;
  std::vector<DegreeRecord> records;
  RateFit fit;
  std::optional<double> reference_rate;
  nlohmann::json metadata;
};

ExperimentReport convergence_run(const ExperimentConfig& cfg);

struct CylinderNode {
  int i = 0, j = 0;
  double x = 0, y = 0, t = 0;
  double residual_entire = 0, residual_rational = 0;
};

struct CylinderResult {
  ExperimentReport entire;
  ExperimentReport rational;
  std::vector<CylinderNode> nodes;  ///< at the largest degree
  double max_node_residual = 0.0;   ///< over all degrees and both functions
};

/// Kergin at planar Leja points Newton-multiplied with Lagrange at R-Leja
/// points, on the unit disk of R^2 times [-1, 1].
CylinderResult cylinder_run(const nlohmann::json& cfg);

struct PolyaReport {
  double lambda = 0.0;
  int dmax = 0;
  /// log sup_{[0,1]} |f[0..k] prod_{i<k} (x - i)|, k = 0..dmax.
  std::vector<double> log_term_sup;
  std::vector<double> ratios;   ///< successive term ratios, k = 1..dmax
  double raw_ratio = 0.0;       ///< ratio at k = dmax
  double measured_ratio = 0.0;  ///< 2 r(dmax) - r(dmax / 2)
  double expected_ratio = 0.0;  ///< |e^lambda - 1|
  bool converges = false;
};

/// Newton series of exp(lambda x) at the nodes 0, 1, 2, ...
PolyaReport polya_run(double lambda, int dmax);

/// Bisection on the converge/diverge verdict over [lo, hi].
double polya_bisect(double lo, double hi, int dmax, int steps = 30);

std::string report_csv(const ExperimentReport& r);
nlohmann::json report_json(const ExperimentReport& r);
ExperimentReport report_from_json(const nlohmann::json& j);

/// Writes <dir>/<stem>.csv and <dir>/<stem>.json.
void report_write(const ExperimentReport& r, const std::filesystem::path& dir, const std::string& stem);
ExperimentReport report_read(const std::filesystem::path& dir, const std::string& stem);

}  // namespace nprox
