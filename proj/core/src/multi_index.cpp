#include "nprox/multi_index.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "nprox/errors.hpp"

namespace nprox {

MultiIndex::MultiIndex(int nvars) {
  if (nvars < 1) throw std::invalid_argument("multi-index needs at least one variable");
  e_.assign(static_cast<std::size_t>(nvars), 0);
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents) : MultiIndex(std::vector<int>(exponents)) {}

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
  if (e_.empty()) throw std::invalid_argument("multi-index needs at least one variable");
  for (int v : e_) {
    if (v < 0) throw std::invalid_argument("negative exponent in multi-index");
  }
}

int MultiIndex::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool MultiIndex::divides(const MultiIndex& other) const {
  if (other.nvars() != nvars()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.nvars() != nvars()) throw DimensionMismatch("multi-index sum with different lengths");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("multi-index difference would be negative");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= other.e_[i];
  return r;
}

MultiIndex MultiIndex::concat(const MultiIndex& tail) const {
  std::vector<int> e = e_;
  e.insert(e.end(), tail.e_.begin(), tail.e_.end());
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::slice(int first, int count) const {
  if (first < 0 || count < 1 || first + count > nvars()) throw std::out_of_range("multi-index slice");
  return MultiIndex(std::vector<int>(e_.begin() + first, e_.begin() + first + count));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    }
  }
  return static_cast<std::uint64_t>(c);
}

std::size_t monomial_count(int nvars, int degree) {
  if (nvars < 1 || degree < 0) throw std::invalid_argument("monomial_count needs n >= 1, d >= 0");
  return static_cast<std::size_t>(binomial(nvars + degree, nvars));
}

std::size_t homogeneous_count(int nvars, int degree) {
  if (degree < 0) return 0;
  return static_cast<std::size_t>(binomial(degree + nvars - 1, nvars - 1));
}

std::size_t graded_lex_rank(const MultiIndex& alpha) {
  const int n = alpha.nvars();
  const int k = alpha.degree();
  std::size_t rank = k > 0 ? monomial_count(n, k - 1) : 0;
  int rem = k;
  for (int i = 0; i + 1 < n; ++i) {
    const int parts = n - i - 1;
    // Indices that agree before i and have a larger i-th exponent come first.
    const int larger = rem - alpha[i];
    if (larger >= 1) rank += static_cast<std::size_t>(binomial(larger - 1 + parts, parts));
    rem -= alpha[i];
  }
  return rank;
}

MultiIndex graded_lex_unrank(int nvars, std::size_t rank) {
  int k = 0;
  while (monomial_count(nvars, k) <= rank) ++k;
  std::size_t idx = rank - (k > 0 ? monomial_count(nvars, k - 1) : 0);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  int rem = k;
  for (int i = 0; i + 1 < nvars; ++i) {
    const int parts = nvars - i - 1;
    for (int v = rem; v >= 0; --v) {
      const auto count = static_cast<std::size_t>(binomial(rem - v + parts - 1, parts - 1));
      if (idx < count) {
        e[static_cast<std::size_t>(i)] = v;
        rem -= v;
        break;
      }
      idx -= count;
    }
  }
  e[static_cast<std::size_t>(nvars - 1)] = rem;
  return MultiIndex(std::move(e));
}

namespace {

void compositions(int nvars, int pos, int rem, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (pos == nvars - 1) {
    cur[static_cast<std::size_t>(pos)] = rem;
    out.emplace_back(cur);
    return;
  }
  for (int v = rem; v >= 0; --v) {
    cur[static_cast<std::size_t>(pos)] = v;
    compositions(nvars, pos + 1, rem - v, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> indices_of_degree(int nvars, int degree) {
  if (nvars < 1) throw std::invalid_argument("indices_of_degree needs n >= 1");
  std::vector<MultiIndex> out;
  if (degree < 0) return out;
  out.reserve(homogeneous_count(nvars, degree));
  std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
  compositions(nvars, 0, degree, cur, out);
  return out;
}

const std::vector<MultiIndex>& graded_lex_indices(int nvars, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<MultiIndex>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{nvars, degree}];
  if (!slot) {
    auto all = std::make_unique<std::vector<MultiIndex>>();
    all->reserve(monomial_count(nvars, degree));
    for (int k = 0; k <= degree; ++k) {
      auto level = indices_of_degree(nvars, k);
      all->insert(all->end(), level.begin(), level.end());
    }
    slot = std::move(all);
  }
  return *slot;
}

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  if (n > 170) return std::numeric_limits<double>::infinity();
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double factorial(const MultiIndex& alpha) {
  double r = 1.0;
  for (int v : alpha.exponents()) r *= factorial(v);
  return r;
}

double falling_factorial(const MultiIndex& gamma, const MultiIndex& alpha) {
  if (!alpha.divides(gamma)) return 0.0;
  double r = 1.0;
  for (int i = 0; i < gamma.nvars(); ++i) {
    for (int j = 0; j < alpha[i]; ++j) r *= gamma[i] - j;
  }
  return r;
}

}  // namespace nprox
