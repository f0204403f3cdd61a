#include "nprox/projector.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nprox/errors.hpp"

namespace nprox {

/// Column-pivoted QR of a row- and column-equilibrated leading block.
class LevelSolver {
 public:
  explicit LevelSolver(const Eigen::MatrixXcd& a) {
    const Eigen::Index n = a.rows();
    row_ = Eigen::VectorXd::Ones(n);
    col_ = Eigen::VectorXd::Ones(n);
    Eigen::MatrixXcd s = a;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double m = s.row(i).cwiseAbs().maxCoeff();
      if (m > 0) {
        row_(i) = 1.0 / m;
        s.row(i) *= row_(i);
      }
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const double m = s.col(j).cwiseAbs().maxCoeff();
      if (m > 0) {
        col_(j) = 1.0 / m;
        s.col(j) *= col_(j);
      }
    }
    qr_.compute(s);
    const auto diag = qr_.matrixR().diagonal().cwiseAbs();
    const double lo = diag.minCoeff();
    cond_ = lo > 0 ? diag.maxCoeff() / lo : std::numeric_limits<double>::infinity();
  }

  double condition() const { return cond_; }

  Eigen::VectorXcd solve(const Eigen::VectorXcd& b) const {
    Eigen::VectorXcd y = qr_.solve((row_.array() * b.array()).matrix().eval());
    return (col_.array() * y.array()).matrix();
  }

 private:
  Eigen::VectorXd row_, col_;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr_;
  double cond_ = 0.0;
};

namespace {

void check_levels(const Levels& levels, int& nvars) {
  if (levels.empty()) throw std::invalid_argument("projector needs at least level 0");
  if (levels[0].empty()) throw DimensionMismatch("level 0 must hold one functional");
  nvars = levels[0][0].nvars();
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (levels[j].size() != homogeneous_count(nvars, static_cast<int>(j))) {
      throw DimensionMismatch("level " + std::to_string(j) + " holds " + std::to_string(levels[j].size()) +
                              " functionals, expected " + std::to_string(homogeneous_count(nvars, static_cast<int>(j))));
    }
    for (const auto& mu : levels[j]) {
      if (mu.nvars() != nvars) throw DimensionMismatch("functionals in different numbers of variables");
    }
  }
}

}  // namespace

NewtonProjector NewtonProjector::build(Levels levels, const BuildOptions& opt) {
  int n = 1;
  check_levels(levels, n);
  const int d = static_cast<int>(levels.size()) - 1;
  const auto dim = static_cast<Eigen::Index>(monomial_count(n, d));
  Eigen::MatrixXcd m(dim, dim);
  Eigen::Index row = 0;
  for (const auto& level : levels) {
    for (const auto& mu : level) {
      const auto v = monomial_values(mu, d);
      for (Eigen::Index c = 0; c < dim; ++c) m(row, c) = v[static_cast<std::size_t>(c)];
      ++row;
    }
  }
  return from_matrix(std::move(levels), std::move(m), opt);
}

NewtonProjector NewtonProjector::from_matrix(Levels levels, Eigen::MatrixXcd matrix, const BuildOptions& opt) {
  NewtonProjector p;
  check_levels(levels, p.n_);
  p.d_ = static_cast<int>(levels.size()) - 1;
  const auto dim = static_cast<Eigen::Index>(monomial_count(p.n_, p.d_));
  if (matrix.rows() != dim || matrix.cols() != dim) throw DimensionMismatch("system matrix has wrong shape");
  p.levels_ = std::move(levels);
  p.m_ = std::move(matrix);
  p.opt_ = opt;
  for (int j = 0; j <= p.d_; ++j) {
    const auto nj = static_cast<Eigen::Index>(monomial_count(p.n_, j));
    auto solver = std::make_shared<const LevelSolver>(p.m_.topLeftCorner(nj, nj));
    const double c = solver->condition();
    if (!(c <= opt.condition_threshold)) throw NestedUnisolvenceFailure(j, c);
    p.cond_.push_back(c);
    p.solvers_.push_back(std::move(solver));
  }
  return p;
}

std::vector<Functional> NewtonProjector::functionals() const {
  std::vector<Functional> out;
  for (const auto& level : levels_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<cplx> NewtonProjector::conditions(const TestFunction& f) const {
  if (f.nvars() != n_) throw DimensionMismatch("test function and projector differ in dimension");
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(m_.rows()));
  for (const auto& level : levels_) {
    for (const auto& mu : level) out.push_back(apply_to_function(mu, f, opt_.quadrature));
  }
  return out;
}

std::vector<cplx> NewtonProjector::conditions(const Polynomial& p) const {
  if (p.nvars() != n_) throw DimensionMismatch("polynomial and projector differ in dimension");
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(m_.rows()));
  if (p.degree_bound() <= d_) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(m_.cols());
    for (std::size_t r = 0; r < p.coeffs().size(); ++r) c(static_cast<Eigen::Index>(r)) = p.coeffs()[r];
    const Eigen::VectorXcd v = m_ * c;
    out.assign(v.data(), v.data() + v.size());
    return out;
  }
  for (const auto& level : levels_) {
    for (const auto& mu : level) out.push_back(apply_to_polynomial(mu, p));
  }
  return out;
}

Polynomial NewtonProjector::solve(const std::vector<cplx>& rhs, int j) const {
  if (j < 0) j = d_;
  if (j > d_) throw std::out_of_range("solve beyond projector degree");
  const auto nj = static_cast<Eigen::Index>(monomial_count(n_, j));
  if (static_cast<Eigen::Index>(rhs.size()) < nj) throw DimensionMismatch("too few condition values");
  Eigen::VectorXcd b(nj);
  for (Eigen::Index i = 0; i < nj; ++i) b(i) = rhs[static_cast<std::size_t>(i)];
  const Eigen::VectorXcd x = solvers_[static_cast<std::size_t>(j)]->solve(b);
  return Polynomial(n_, j, std::vector<cplx>(x.data(), x.data() + x.size()));
}

Polynomial NewtonProjector::apply(const TestFunction& f) const { return solve(conditions(f)); }
Polynomial NewtonProjector::apply(const Polynomial& p) const { return solve(conditions(p)); }

NewtonProjector NewtonProjector::truncate(int j) const {
  if (j < 0 || j > d_) throw std::out_of_range("truncation level outside 0..d");
  NewtonProjector p;
  p.n_ = n_;
  p.d_ = j;
  p.levels_.assign(levels_.begin(), levels_.begin() + j + 1);
  const auto nj = static_cast<Eigen::Index>(monomial_count(n_, j));
  p.m_ = m_.topLeftCorner(nj, nj);
  p.solvers_.assign(solvers_.begin(), solvers_.begin() + j + 1);
  p.cond_.assign(cond_.begin(), cond_.begin() + j + 1);
  p.opt_ = opt_;
  return p;
}

std::vector<Polynomial> NewtonProjector::summands_from(const std::vector<cplx>& rhs) const {
  std::vector<Polynomial> out;
  Polynomial prev(n_, d_);
  for (int k = 0; k <= d_; ++k) {
    Polynomial cur = solve(rhs, k).with_degree_bound(d_);
    out.push_back(cur - prev);
    prev = std::move(cur);
  }
  return out;
}

std::vector<Polynomial> NewtonProjector::newton_summands(const TestFunction& f) const {
  return summands_from(conditions(f));
}

std::vector<Polynomial> NewtonProjector::newton_summands(const Polynomial& p) const {
  return summands_from(conditions(p));
}

Polynomial NewtonProjector::newton_summand(int k, const TestFunction& f) const {
  if (k < 0 || k > d_) throw std::out_of_range("summand index outside 0..d");
  const auto rhs = conditions(f);
  Polynomial cur = solve(rhs, k).with_degree_bound(d_);
  if (k == 0) return cur;
  return cur - solve(rhs, k - 1).with_degree_bound(d_);
}

NewtonProjector newton_product(const NewtonProjector& p1, const NewtonProjector& p2, const BuildOptions& opt) {
  if (p1.degree() != p2.degree()) throw std::invalid_argument("Newton product needs equal degrees");
  const int d = p1.degree();
  const int n1 = p1.nvars();
  const int n2 = p2.nvars();
  const int n = n1 + n2;

  // Row offsets of each level inside the factor matrices.
  auto offsets = [](const NewtonProjector& p) {
    std::vector<Eigen::Index> off{0};
    for (const auto& level : p.levels()) off.push_back(off.back() + static_cast<Eigen::Index>(level.size()));
    return off;
  };
  const auto off1 = offsets(p1);
  const auto off2 = offsets(p2);

  const auto& idx = graded_lex_indices(n, d);
  const auto dim = static_cast<Eigen::Index>(idx.size());
  std::vector<Eigen::Index> c1(idx.size()), c2(idx.size());
  for (std::size_t g = 0; g < idx.size(); ++g) {
    c1[g] = static_cast<Eigen::Index>(graded_lex_rank(idx[g].slice(0, n1)));
    c2[g] = static_cast<Eigen::Index>(graded_lex_rank(idx[g].slice(n1, n2)));
  }

  Levels levels(static_cast<std::size_t>(d) + 1);
  Eigen::MatrixXcd m(dim, dim);
  Eigen::Index row = 0;
  for (int i = 0; i <= d; ++i) {
    for (int i1 = 0; i1 <= i; ++i1) {
      const int i2 = i - i1;
      const auto& l1 = p1.levels()[static_cast<std::size_t>(i1)];
      const auto& l2 = p2.levels()[static_cast<std::size_t>(i2)];
      for (std::size_t a = 0; a < l1.size(); ++a) {
        for (std::size_t b = 0; b < l2.size(); ++b) {
          levels[static_cast<std::size_t>(i)].push_back(tensor(l1[a], l2[b]));
          const Eigen::Index r1 = off1[static_cast<std::size_t>(i1)] + static_cast<Eigen::Index>(a);
          const Eigen::Index r2 = off2[static_cast<std::size_t>(i2)] + static_cast<Eigen::Index>(b);
          for (Eigen::Index g = 0; g < dim; ++g) {
            m(row, g) = p1.matrix()(r1, c1[static_cast<std::size_t>(g)]) * p2.matrix()(r2, c2[static_cast<std::size_t>(g)]);
          }
          ++row;
        }
      }
    }
  }
  return NewtonProjector::from_matrix(std::move(levels), std::move(m), opt);
}

Polynomial apply_product_formula(const NewtonProjector& p1, const NewtonProjector& p2, const TestFunction& f1,
                                 const TestFunction& f2) {
  if (p1.degree() != p2.degree()) throw std::invalid_argument("product formula needs equal degrees");
  const int d = p1.degree();
  const auto s1 = p1.newton_summands(f1);
  const auto s2 = p2.newton_summands(f2);
  Polynomial out(p1.nvars() + p2.nvars(), d);
  for (int i = 0; i <= d; ++i) {
    const Polynomial a = s1[static_cast<std::size_t>(i)].with_degree_bound(i, true);
    for (int j = 0; i + j <= d; ++j) {
      const Polynomial b = s2[static_cast<std::size_t>(j)].with_degree_bound(j, true);
      out = out + tensor_embed(a, b).with_degree_bound(d);
    }
  }
  return out;
}

BSet::BSet(int d, int a, int b) : d_(d), a_(a), b_(b) {
  if (d < 0 || a < 0 || b < 0) throw std::invalid_argument("BSet parameters must be nonnegative");
}

bool BSet::contains(int i1, int i2) const {
  return i1 >= 0 && i2 >= 0 && d_ + 1 <= i1 + i2 && i1 <= a_ && i2 <= b_;
}

std::vector<std::pair<int, int>> BSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i1 = 0; i1 <= a_; ++i1) {
    for (int i2 = std::max(0, d_ + 1 - i1); i2 <= b_; ++i2) out.emplace_back(i1, i2);
  }
  return out;
}

std::size_t BSet::cardinality() const { return pairs().size(); }

Polynomial residual_expansion(const NewtonProjector& p1, const NewtonProjector& p2, int d, const Polynomial& pa,
                              const Polynomial& pb) {
  const int a = pa.degree();
  const int b = pb.degree();
  if (a < 0 || b < 0) throw std::invalid_argument("residual expansion needs nonzero polynomials");
  if (a + b < d + 1) throw std::invalid_argument("residual expansion needs deg pa + deg pb >= d + 1");
  if (p1.degree() < std::max(a, d) || p2.degree() < std::max(b, d)) {
    throw std::invalid_argument("factor projectors must reach max(d, polynomial degree)");
  }
  const auto s1 = p1.newton_summands(pa);
  const auto s2 = p2.newton_summands(pb);
  Polynomial out(p1.nvars() + p2.nvars(), a + b);
  for (const auto& [i1, i2] : BSet(d, a, b).pairs()) {
    const Polynomial u = s1[static_cast<std::size_t>(i1)].with_degree_bound(i1, true);
    const Polynomial v = s2[static_cast<std::size_t>(i2)].with_degree_bound(i2, true);
    out = out + tensor_embed(u, v);
  }
  return out;
}

}  // namespace nprox
