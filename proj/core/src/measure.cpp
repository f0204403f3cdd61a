#include "nprox/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nprox/errors.hpp"

namespace nprox {

cplx QuadratureMeasure::integrate(const std::vector<cplx>& values) const {
  if (values.size() != nodes.size()) throw DimensionMismatch("values length differs from node count");
  cplx s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += weights[i] * values[i];
  return s;
}

MeasurePtr circle_measure(int m) {
  if (m < 1) throw std::invalid_argument("circle_measure needs m >= 1");
  auto q = std::make_shared<QuadratureMeasure>();
  q->domain = "circle";
  q->nvars = 1;
  q->exactness = m - 1;
  for (int k = 0; k < m; ++k) {
    q->nodes.push_back({std::polar(1.0, 2.0 * std::numbers::pi * k / m)});
    q->weights.push_back(1.0 / m);
  }
  return q;
}

MeasurePtr chebyshev_measure(int m) {
  if (m < 1) throw std::invalid_argument("chebyshev_measure needs m >= 1");
  auto q = std::make_shared<QuadratureMeasure>();
  q->domain = "chebyshev";
  q->nvars = 1;
  q->exactness = 2 * m - 1;
  for (int k = 0; k < m; ++k) {
    q->nodes.push_back({cplx(std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * m)))});
    q->weights.push_back(1.0 / m);
  }
  return q;
}

MeasurePtr product_measure(const MeasurePtr& a, const MeasurePtr& b) {
  auto q = std::make_shared<QuadratureMeasure>();
  q->domain = a->domain + "*" + b->domain;
  q->nvars = a->nvars + b->nvars;
  q->exactness = std::min(a->exactness, b->exactness);
  for (std::size_t i = 0; i < a->nodes.size(); ++i) {
    for (std::size_t j = 0; j < b->nodes.size(); ++j) {
      Point x = a->nodes[i];
      x.insert(x.end(), b->nodes[j].begin(), b->nodes[j].end());
      q->nodes.push_back(std::move(x));
      q->weights.push_back(a->weights[i] * b->weights[j]);
    }
  }
  return q;
}

namespace {

// Monomial coefficients of orthonormal polynomials grow like 2^d and their
// absolute sum like (1 + sqrt 2)^d, which exhausts long double near d = 30.
#ifdef __SIZEOF_FLOAT128__
using wide = __float128;
#else
using wide = long double;
#endif

// std::complex is unspecified for non-standard floating types.
struct wcplx {
  wide re = 0, im = 0;
  wcplx() = default;
  wcplx(wide r, wide i = 0) : re(r), im(i) {}
  explicit wcplx(cplx z) : re(z.real()), im(z.imag()) {}
  bool nonzero() const { return re != 0 || im != 0; }
  cplx narrow() const { return {static_cast<double>(re), static_cast<double>(im)}; }
  wcplx& operator+=(wcplx o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  wcplx& operator-=(wcplx o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend wcplx operator-(wcplx a, wcplx b) { return {a.re - b.re, a.im - b.im}; }
  friend wcplx operator*(wcplx a, wcplx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend wcplx operator*(wcplx a, wide t) { return {a.re * t, a.im * t}; }
};

std::vector<cplx> round_plain(const std::vector<wcplx>& c) {
  std::vector<cplx> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = c[k].narrow();
  return out;
}

// Rounds univariate coefficients top-down. The rounding error delta at x^k is
// pushed into lower coefficients as delta (x^k - 2^{1-k} T_k), so only
// delta 2^{1-k} T_k remains, which is negligible on [-1, 1].
std::vector<cplx> round_on_interval(std::vector<wcplx> c) {
  const std::size_t n = c.size();
  std::vector<std::vector<wide>> t{{1}};
  if (n > 1) t.push_back({0, 1});
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<wide> next(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) next[j + 1] += 2 * t[k - 1][j];
    for (std::size_t j = 0; j + 1 < k; ++j) next[j] -= t[k - 2][j];
    t.push_back(std::move(next));
  }
  std::vector<cplx> out(n);
  for (std::size_t k = n; k-- > 0;) {
    out[k] = c[k].narrow();
    const wcplx delta = c[k] - wcplx(out[k]);
    if (k < 2) continue;
    const wide lead = t[k][k];
    for (std::size_t j = 0; j < k; ++j) c[j] -= delta * (t[k][j] / lead);
  }
  return out;
}

}  // namespace

OrthonormalBasis gram_schmidt_basis(const MeasurePtr& m, int d) {
  if (!m) throw std::invalid_argument("gram_schmidt_basis needs a measure");
  const int n = m->nvars;
  const std::size_t dim = monomial_count(n, d);
  const std::size_t npts = m->nodes.size();
  if (npts < dim) throw SingularGram("fewer quadrature nodes than basis polynomials");

  // Arnoldi-style candidates: the value column of z^alpha is replaced by
  // x_i * b_parent with alpha = parent + e_i. Both span the same nested spaces
  // in graded-lex order, the latter with far better conditioning.
  const auto& idx = graded_lex_indices(n, d);
  std::vector<std::vector<cplx>> q;      // orthonormal sqrt(w)-weighted value columns
  // Monomial coefficients, accumulated in extended precision because they
  // grow like 2^d while the values stay bounded.
  std::vector<std::vector<wcplx>> coef;
  q.reserve(dim);
  coef.reserve(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    std::vector<cplx> v(npts);
    std::vector<wcplx> c(dim);
    if (r == 0) {
      for (std::size_t i = 0; i < npts; ++i) v[i] = std::sqrt(m->weights[i]);
      c[0] = 1.0;
    } else {
      const MultiIndex& alpha = idx[r];
      int var = 0;
      while (alpha[var] == 0) ++var;
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(var)] = 1;
      const MultiIndex step(e);
      const std::size_t parent = graded_lex_rank(alpha - step);
      for (std::size_t i = 0; i < npts; ++i) v[i] = m->nodes[i][static_cast<std::size_t>(var)] * q[parent][i];
      for (std::size_t k = 0; k <= parent; ++k) {
        if (coef[parent][k].nonzero()) c[graded_lex_rank(idx[k] + step)] += coef[parent][k];
      }
    }
    double before = 0.0;
    for (const auto& x : v) before += std::norm(x);
    before = std::sqrt(before);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        cplx h = 0.0;
        for (std::size_t i = 0; i < npts; ++i) h += v[i] * std::conj(q[j][i]);
        for (std::size_t i = 0; i < npts; ++i) v[i] -= h * q[j][i];
        for (std::size_t k = 0; k <= j; ++k) c[k] -= wcplx(h) * coef[j][k];
      }
    }
    double norm = 0.0;
    for (const auto& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (!(norm > 1e-13 * before)) {
      throw SingularGram("Gram matrix singular at monomial rank " + std::to_string(r));
    }
    for (auto& x : v) x /= norm;
    for (auto& x : c) x = x * (1 / static_cast<wide>(norm));
    c[r].im = 0;
    q.push_back(std::move(v));
    coef.push_back(std::move(c));
  }

  OrthonormalBasis basis;
  basis.measure = m;
  basis.degree = d;
  const bool interval = m->domain == "chebyshev";
  for (auto& c : coef) basis.b.emplace_back(n, d, interval ? round_on_interval(std::move(c)) : round_plain(c));
  return basis;
}

namespace {

std::vector<cplx> basis_values_at(const OrthonormalBasis& basis, const Point& z, const std::vector<MultiIndex>& idx) {
  const std::size_t dim = basis.b.size();
  std::vector<wide> vr(dim), vi(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    wide tr = 1, ti = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const wide zr = z[k].real(), zi = z[k].imag();
      for (int e = 0; e < idx[r][static_cast<int>(k)]; ++e) {
        const wide nr = tr * zr - ti * zi;
        ti = tr * zi + ti * zr;
        tr = nr;
      }
    }
    vr[r] = tr;
    vi[r] = ti;
  }
  std::vector<cplx> out(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    wide sr = 0, si = 0;
    const auto& c = basis.b[a].coeffs();
    for (std::size_t r = 0; r < c.size(); ++r) {
      const wide cr = c[r].real(), ci = c[r].imag();
      sr += cr * vr[r] - ci * vi[r];
      si += cr * vi[r] + ci * vr[r];
    }
    out[a] = cplx(static_cast<double>(sr), static_cast<double>(si));
  }
  return out;
}

}  // namespace

double gram_residual(const OrthonormalBasis& basis) {
  const auto& m = *basis.measure;
  const std::size_t dim = basis.b.size();
  const auto& idx = graded_lex_indices(m.nvars, basis.degree);
  std::vector<std::vector<cplx>> vals(m.nodes.size());
  for (std::size_t i = 0; i < m.nodes.size(); ++i) vals[i] = basis_values_at(basis, m.nodes[i], idx);
  double worst = 0.0;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a; b < dim; ++b) {
      cplx g = 0.0;
      for (std::size_t i = 0; i < m.nodes.size(); ++i) g += m.weights[i] * vals[i][a] * std::conj(vals[i][b]);
      worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

BmDiagnostic bm_diagnostic(const MeasurePtr& m, const std::vector<Point>& grid, int dmax) {
  const auto basis = gram_schmidt_basis(m, dmax);
  const auto& idx = graded_lex_indices(m->nvars, dmax);
  BmDiagnostic out;
  out.rows.resize(static_cast<std::size_t>(dmax) + 1);
  for (int k = 0; k <= dmax; ++k) out.rows[static_cast<std::size_t>(k)] = BmRow{k, 0.0};
  for (const auto& x : grid) {
    const auto v = basis_values_at(basis, x, idx);
    for (std::size_t a = 0; a < v.size(); ++a) {
      auto& row = out.rows[static_cast<std::size_t>(idx[a].degree())];
      row.max_sup = std::max(row.max_sup, std::abs(v[a]));
    }
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& row : out.rows) {
    const double y = std::log(row.max_sup);
    sx += row.degree;
    sy += y;
    sxx += static_cast<double>(row.degree) * row.degree;
    sxy += row.degree * y;
  }
  const double cnt = static_cast<double>(out.rows.size());
  const double den = cnt * sxx - sx * sx;
  out.rate = den > 0 ? std::exp((cnt * sxy - sx * sy) / den) : 1.0;
  return out;
}

}  // namespace nprox
