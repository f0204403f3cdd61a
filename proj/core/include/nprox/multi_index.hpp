#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace nprox {

/// Exponent vector of the monomial z^alpha. Length is the number of variables.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int nvars);
  MultiIndex(std::initializer_list<int> exponents);
  explicit MultiIndex(std::vector<int> exponents);

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const;
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return e_; }

  /// Componentwise this <= other.
  bool divides(const MultiIndex& other) const;
  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator-(const MultiIndex& other) const;
  /// (this, tail) as an index in nvars() + tail.nvars() variables.
  MultiIndex concat(const MultiIndex& tail) const;
  MultiIndex slice(int first, int count) const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> e_;
};

/// Binomial coefficient; throws std::overflow_error when it does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// Dimension C(n+d, n) of polynomials of total degree <= d in n variables.
std::size_t monomial_count(int nvars, int degree);

/// Number of multi-indices of total degree exactly d.
std::size_t homogeneous_count(int nvars, int degree);

/// Graded-lex rank: lower total degree first, then lexicographic with the
/// first variable most significant (x before y).
std::size_t graded_lex_rank(const MultiIndex& alpha);
MultiIndex graded_lex_unrank(int nvars, std::size_t rank);

/// All indices with |alpha| <= degree in graded-lex order. Cached; the returned
/// reference stays valid for the lifetime of the program.
const std::vector<MultiIndex>& graded_lex_indices(int nvars, int degree);

/// Indices with |alpha| == degree in graded-lex order.
std::vector<MultiIndex> indices_of_degree(int nvars, int degree);

double factorial(int n);
/// alpha! = prod alpha_i!
double factorial(const MultiIndex& alpha);
/// gamma! / (gamma - alpha)!, zero unless alpha divides gamma.
double falling_factorial(const MultiIndex& gamma, const MultiIndex& alpha);

}  // namespace nprox
