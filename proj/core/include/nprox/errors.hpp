#pragma once

#include <stdexcept>
#include <string>

namespace nprox {

/// Operand variable counts or sizes do not agree.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A test function has a pole on the support of a functional.
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& locus, const std::string& where)
      : std::domain_error("pole " + locus + " meets " + where), locus_(locus) {}
  const std::string& locus() const noexcept { return locus_; }

 private:
  std::string locus_;
};

/// Leading block `level` of a projector system is singular or too ill-conditioned.
class NestedUnisolvenceFailure : public std::runtime_error {
 public:
  NestedUnisolvenceFailure(int level, double condition)
      : std::runtime_error("nested unisolvence fails at level " + std::to_string(level) +
                           " (condition estimate " + std::to_string(condition) + ")"),
        level_(level),
        condition_(condition) {}
  int level() const noexcept { return level_; }
  double condition() const noexcept { return condition_; }

 private:
  int level_;
  double condition_;
};

/// Gram matrix of a quadrature measure is numerically singular on the requested space.
class SingularGram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nprox
