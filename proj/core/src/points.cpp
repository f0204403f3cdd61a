#include "nprox/points.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nprox {

std::vector<cplx> PointSequence::scalars() const {
  std::vector<cplx> out;
  for (const auto& p : points) out.push_back(p.at(0));
  return out;
}

PointSequence make_sequence(const std::vector<cplx>& values, std::string provenance) {
  PointSequence s;
  s.dimension = 1;
  s.provenance = std::move(provenance);
  for (const auto& v : values) s.points.push_back({v});
  return s;
}

PointSequence leja_disk(std::size_t count) {
  if (count < 2 || (count & (count - 1)) != 0) throw std::invalid_argument("leja_disk count must be a power of two >= 2");
  std::vector<cplx> s{1.0, -1.0};
  for (int n = 1; s.size() < count; ++n) {
    const cplx rho = std::polar(1.0, std::numbers::pi / std::ldexp(1.0, n));
    const std::size_t half = s.size();
    for (std::size_t i = 0; i < half; ++i) s.push_back(rho * s[i]);
  }
  return make_sequence(s, "leja_recursive");
}

double log_distance_product(cplx z, const std::vector<cplx>& previous) {
  double s = 0.0;
  for (const auto& a : previous) s += std::log(std::abs(z - a));
  return s;
}

PointSequence leja_greedy_oracle(const std::vector<cplx>& sample, std::size_t count) {
  if (sample.empty()) throw std::invalid_argument("leja_greedy_oracle needs a nonempty sample");
  auto arg0 = [](cplx z) {
    double a = std::arg(z);
    return a < 0 ? a + 2.0 * std::numbers::pi : a;
  };
  std::size_t first = 0;
  for (std::size_t i = 1; i < sample.size(); ++i) {
    const double m = std::abs(sample[i]);
    const double best = std::abs(sample[first]);
    if (m > best + 1e-14 || (std::abs(m - best) <= 1e-14 && arg0(sample[i]) < arg0(sample[first]))) first = i;
  }
  std::vector<cplx> chosen{sample[first]};
  // Running log-distance sums, updated incrementally.
  std::vector<double> score(sample.size(), 0.0);
  std::vector<bool> used(sample.size(), false);
  used[first] = true;
  while (chosen.size() < std::min(count, sample.size())) {
    const cplx last = chosen.back();
    std::size_t best = sample.size();
    for (std::size_t i = 0; i < sample.size(); ++i) {
      if (used[i]) continue;
      const double dist = std::abs(sample[i] - last);
      score[i] = dist == 0.0 ? -std::numeric_limits<double>::infinity() : score[i] + std::log(dist);
      if (best == sample.size() || score[i] > score[best] + 1e-12) best = i;
    }
    used[best] = true;
    chosen.push_back(sample[best]);
  }
  return make_sequence(chosen, "leja_greedy");
}

std::vector<cplx> leja_order(const std::vector<cplx>& values) {
  if (values.empty()) return {};
  return leja_greedy_oracle(values, values.size()).scalars();
}

PointSequence r_leja(const PointSequence& leja, double tol) {
  std::vector<cplx> out;
  for (const auto& z : leja.scalars()) {
    if (std::abs(std::abs(z) - 1.0) > 1e-10) throw std::invalid_argument("r_leja input is not on the unit circle");
    const double x = z.real();
    bool seen = false;
    for (const auto& y : out) seen = seen || std::abs(y.real() - x) <= tol;
    if (!seen) out.emplace_back(x, 0.0);
  }
  return make_sequence(out, "r_leja");
}

PointSequence chebyshev_nodes(int d) {
  if (d < 0) throw std::invalid_argument("chebyshev_nodes needs d >= 0");
  std::vector<cplx> v;
  for (int k = 0; k <= d; ++k) v.emplace_back(std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * d + 2.0)), 0.0);
  return make_sequence(v, "chebyshev");
}

PointSequence integer_nodes(int d) {
  if (d < 0) throw std::invalid_argument("integer_nodes needs d >= 0");
  std::vector<cplx> v;
  for (int k = 0; k <= d; ++k) v.emplace_back(static_cast<double>(k), 0.0);
  return make_sequence(v, "integer");
}

PointSequence equiangular(int d) {
  if (d < 0) throw std::invalid_argument("equiangular needs d >= 0");
  std::vector<cplx> v;
  for (int k = 0; k <= d; ++k) v.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / (d + 1.0)));
  return make_sequence(v, "equiangular");
}

PointSequence planar(const PointSequence& seq) {
  PointSequence s;
  s.dimension = 2;
  s.provenance = seq.provenance;
  for (const auto& z : seq.scalars()) s.points.push_back({cplx(z.real()), cplx(z.imag())});
  return s;
}

std::vector<cplx> circle_grid(std::size_t m) {
  std::vector<cplx> v;
  v.reserve(m);
  for (std::size_t k = 0; k < m; ++k) v.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m)));
  return v;
}

}  // namespace nprox
