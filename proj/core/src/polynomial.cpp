#include "nprox/polynomial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "nprox/errors.hpp"

namespace nprox {

namespace {

struct Parent {
  std::size_t rank;
  int var;
};

// For every alpha != 0: alpha = parent + e_var with var the first nonzero slot.
const std::vector<Parent>& parent_table(int nvars, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<Parent>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{nvars, degree}];
  if (!slot) {
    const auto& idx = graded_lex_indices(nvars, degree);
    auto table = std::make_unique<std::vector<Parent>>(idx.size(), Parent{0, 0});
    for (std::size_t r = 1; r < idx.size(); ++r) {
      MultiIndex a = idx[r];
      int v = 0;
      while (a[v] == 0) ++v;
      a[v] -= 1;
      (*table)[r] = Parent{graded_lex_rank(a), v};
    }
    slot = std::move(table);
  }
  return *slot;
}

void check_same_vars(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars()) throw DimensionMismatch("polynomials in different numbers of variables");
}

}  // namespace

Polynomial::Polynomial(int nvars, int degree_bound) : nvars_(nvars), degree_(degree_bound) {
  if (nvars < 1 || degree_bound < 0) throw std::invalid_argument("polynomial needs nvars >= 1, degree >= 0");
  c_.assign(monomial_count(nvars, degree_bound), cplx(0.0));
}

Polynomial::Polynomial(int nvars, int degree_bound, std::vector<cplx> coeffs) : Polynomial(nvars, degree_bound) {
  if (coeffs.size() != c_.size()) throw DimensionMismatch("coefficient vector length differs from C(n+d, n)");
  c_ = std::move(coeffs);
}

Polynomial Polynomial::constant(int nvars, cplx c) {
  Polynomial p(nvars, 0);
  p.c_[0] = c;
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, cplx c) {
  Polynomial p(alpha.nvars(), alpha.degree());
  p.c_[graded_lex_rank(alpha)] = c;
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
  MultiIndex a(nvars);
  a[i] = 1;
  return monomial(a);
}

int Polynomial::degree(double tol) const {
  for (std::size_t r = c_.size(); r-- > 0;) {
    if (std::abs(c_[r]) > tol) return graded_lex_unrank(nvars_, r).degree();
  }
  return -1;
}

cplx Polynomial::coeff(const MultiIndex& alpha) const {
  if (alpha.nvars() != nvars_) throw DimensionMismatch("multi-index length differs from nvars");
  if (alpha.degree() > degree_) return 0.0;
  return c_[graded_lex_rank(alpha)];
}

cplx& Polynomial::coeff(const MultiIndex& alpha) {
  if (alpha.nvars() != nvars_) throw DimensionMismatch("multi-index length differs from nvars");
  if (alpha.degree() > degree_) throw std::out_of_range("multi-index beyond degree bound");
  return c_[graded_lex_rank(alpha)];
}

std::vector<cplx> monomial_values_at(std::span<const cplx> z, int d) {
  const int n = static_cast<int>(z.size());
  const auto& parents = parent_table(n, d);
  std::vector<cplx> v(parents.size());
  v[0] = 1.0;
  for (std::size_t r = 1; r < v.size(); ++r) v[r] = v[parents[r].rank] * z[static_cast<std::size_t>(parents[r].var)];
  return v;
}

cplx Polynomial::operator()(std::span<const cplx> z) const {
  if (static_cast<int>(z.size()) != nvars_) throw DimensionMismatch("point dimension differs from nvars");
  if (nvars_ == 1) {
    cplx s = 0.0;
    for (std::size_t r = c_.size(); r-- > 0;) s = s * z[0] + c_[r];
    return s;
  }
  const auto v = monomial_values_at(z, degree_);
  cplx s = 0.0;
  for (std::size_t r = 0; r < c_.size(); ++r) s += c_[r] * v[r];
  return s;
}

Polynomial Polynomial::with_degree_bound(int d, bool truncate) const {
  Polynomial out(nvars_, d);
  const std::size_t keep = std::min(out.c_.size(), c_.size());
  std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(keep), out.c_.begin());
  if (!truncate) {
    for (std::size_t r = keep; r < c_.size(); ++r) {
      if (c_[r] != cplx(0.0)) throw std::invalid_argument("degree bound would drop nonzero coefficients");
    }
  }
  return out;
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  check_same_vars(p, q);
  Polynomial r = p.with_degree_bound(std::max(p.degree_bound(), q.degree_bound()));
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) r.coeffs()[i] += q.coeffs()[i];
  return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + scale(q, -1.0); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  check_same_vars(p, q);
  const int n = p.nvars();
  Polynomial r(n, p.degree_bound() + q.degree_bound());
  if (n == 1) {
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      if (p.coeffs()[i] == cplx(0.0)) continue;
      for (std::size_t j = 0; j < q.coeffs().size(); ++j) r.coeffs()[i + j] += p.coeffs()[i] * q.coeffs()[j];
    }
    return r;
  }
  const auto& ip = graded_lex_indices(n, p.degree_bound());
  const auto& iq = graded_lex_indices(n, q.degree_bound());
  for (std::size_t i = 0; i < ip.size(); ++i) {
    const cplx a = p.coeffs()[i];
    if (a == cplx(0.0)) continue;
    for (std::size_t j = 0; j < iq.size(); ++j) {
      const cplx b = q.coeffs()[j];
      if (b == cplx(0.0)) continue;
      r.coeffs()[graded_lex_rank(ip[i] + iq[j])] += a * b;
    }
  }
  return r;
}

Polynomial scale(const Polynomial& p, cplx s) {
  Polynomial r = p;
  for (auto& c : r.coeffs()) c *= s;
  return r;
}

Polynomial operator*(cplx s, const Polynomial& p) { return scale(p, s); }

Polynomial derivative(const Polynomial& p, const MultiIndex& alpha) {
  if (alpha.nvars() != p.nvars()) throw DimensionMismatch("derivative order length differs from nvars");
  const int k = alpha.degree();
  if (k > p.degree_bound()) return Polynomial(p.nvars(), 0);
  Polynomial r(p.nvars(), p.degree_bound() - k);
  const auto& idx = graded_lex_indices(p.nvars(), p.degree_bound());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (p.coeffs()[i] == cplx(0.0) || !alpha.divides(idx[i])) continue;
    r.coeffs()[graded_lex_rank(idx[i] - alpha)] += p.coeffs()[i] * falling_factorial(idx[i], alpha);
  }
  return r;
}

Polynomial tensor_embed(const Polynomial& p, const Polynomial& q) {
  const int n = p.nvars() + q.nvars();
  Polynomial r(n, p.degree_bound() + q.degree_bound());
  const auto& ip = graded_lex_indices(p.nvars(), p.degree_bound());
  const auto& iq = graded_lex_indices(q.nvars(), q.degree_bound());
  for (std::size_t i = 0; i < ip.size(); ++i) {
    if (p.coeffs()[i] == cplx(0.0)) continue;
    for (std::size_t j = 0; j < iq.size(); ++j) {
      if (q.coeffs()[j] == cplx(0.0)) continue;
      r.coeffs()[graded_lex_rank(ip[i].concat(iq[j]))] = p.coeffs()[i] * q.coeffs()[j];
    }
  }
  return r;
}

double max_coeff_distance(const Polynomial& p, const Polynomial& q) {
  check_same_vars(p, q);
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  double m = 0.0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    const cplx x = i < a.size() ? a[i] : cplx(0.0);
    const cplx y = i < b.size() ? b[i] : cplx(0.0);
    m = std::max(m, std::abs(x - y));
  }
  return m;
}

void to_json(nlohmann::json& j, const Polynomial& p) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) cs.push_back({c.real(), c.imag()});
  j = {{"nvars", p.nvars()}, {"degree", p.degree_bound()}, {"coeffs", cs}};
}

void from_json(const nlohmann::json& j, Polynomial& p) {
  const int n = j.at("nvars").get<int>();
  const int d = j.at("degree").get<int>();
  std::vector<cplx> cs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_array()) {
      cs.emplace_back(c.at(0).get<double>(), c.size() > 1 ? c.at(1).get<double>() : 0.0);
    } else {
      cs.emplace_back(c.get<double>(), 0.0);
    }
  }
  p = Polynomial(n, d, std::move(cs));
}

}  // namespace nprox
