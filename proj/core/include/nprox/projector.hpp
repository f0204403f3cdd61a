#pragma once

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nprox/functional.hpp"
#include "nprox/polynomial.hpp"
#include "nprox/test_function.hpp"

namespace nprox {

struct BuildOptions {
  /// A leading block whose condition estimate exceeds this is rejected.
  double condition_threshold = 1e12;
  QuadratureOptions quadrature;
};

using Levels = std::vector<std::vector<Functional>>;

class LevelSolver;

/// Projector of degree d given by leveled conditions J_0..J_d. Row r of the
/// system matrix is the r-th functional in level order evaluated on the
/// graded-lex monomials; every leading block (levels <= j, degree <= j) is
/// factorized, so all truncations share the work.
class NewtonProjector {
 public:
  static NewtonProjector build(Levels levels, const BuildOptions& opt = {});
  /// As build, with the system matrix supplied by the caller.
  static NewtonProjector from_matrix(Levels levels, Eigen::MatrixXcd matrix, const BuildOptions& opt = {});

  int nvars() const { return n_; }
  int degree() const { return d_; }
  const Levels& levels() const { return levels_; }
  std::vector<Functional> functionals() const;
  const Eigen::MatrixXcd& matrix() const { return m_; }
  /// Condition estimate of each equilibrated leading block.
  const std::vector<double>& level_conditions() const { return cond_; }
  const BuildOptions& options() const { return opt_; }

  /// mu(f) for every condition, in level order.
  std::vector<cplx> conditions(const TestFunction& f) const;
  std::vector<cplx> conditions(const Polynomial& p) const;

  /// The polynomial of degree <= j whose first C(n+j, n) conditions equal
  /// rhs[0..C(n+j, n)). j defaults to the full degree.
  Polynomial solve(const std::vector<cplx>& rhs, int j = -1) const;

  Polynomial apply(const TestFunction& f) const;
  Polynomial apply(const Polynomial& p) const;

  NewtonProjector truncate(int j) const;

  /// pi_k = Pi_k - Pi_{k-1}, with degree bound d.
  Polynomial newton_summand(int k, const TestFunction& f) const;
  /// pi_0..pi_d from one evaluation of the conditions.
  std::vector<Polynomial> newton_summands(const TestFunction& f) const;
  std::vector<Polynomial> newton_summands(const Polynomial& p) const;

 private:
  NewtonProjector() = default;
  std::vector<Polynomial> summands_from(const std::vector<cplx>& rhs) const;

  int n_ = 1;
  int d_ = 0;
  Levels levels_;
  Eigen::MatrixXcd m_;
  std::vector<std::shared_ptr<const LevelSolver>> solvers_;
  std::vector<double> cond_;
  BuildOptions opt_;
};

/// Conditions of the product projector: level i holds mu (x) nu for mu in
/// J1_{i1}, nu in J2_{i2}, i1 + i2 = i, with i1 ascending.
NewtonProjector newton_product(const NewtonProjector& p1, const NewtonProjector& p2, const BuildOptions& opt = {});

/// sum_{i + j <= d} pi1_i(f1) (x) pi2_j(f2).
Polynomial apply_product_formula(const NewtonProjector& p1, const NewtonProjector& p2, const TestFunction& f1,
                                 const TestFunction& f2);

/// Index pairs (i1, i2) with d + 1 <= i1 + i2, i1 <= a, i2 <= b.
class BSet {
 public:
  BSet(int d, int a, int b);
  int d() const { return d_; }
  int a() const { return a_; }
  int b() const { return b_; }
  bool contains(int i1, int i2) const;
  std::vector<std::pair<int, int>> pairs() const;
  std::size_t cardinality() const;

 private:
  int d_, a_, b_;
};

/// sum over B(d, deg pa, deg pb) of pi1_{i1}(pa) (x) pi2_{i2}(pb), which equals
/// pa (x) pb - Pi_d(pa (x) pb) for Pi_d the product of the degree-d truncations.
/// The factor projectors must have degree >= max(d, deg of their polynomial).
Polynomial residual_expansion(const NewtonProjector& p1, const NewtonProjector& p2, int d, const Polynomial& pa,
                              const Polynomial& pb);

}  // namespace nprox
