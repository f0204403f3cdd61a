#pragma once

#include <complex>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nprox/multi_index.hpp"

namespace nprox {

using cplx = std::complex<double>;
using Point = std::vector<cplx>;

/// Dense polynomial of total degree <= degree_bound() in nvars() complex
/// variables. Coefficients are stored by graded-lex rank.
class Polynomial {
 public:
  Polynomial() = default;
  /// Zero polynomial.
  Polynomial(int nvars, int degree_bound);
  Polynomial(int nvars, int degree_bound, std::vector<cplx> coeffs);

  static Polynomial constant(int nvars, cplx c);
  static Polynomial monomial(const MultiIndex& alpha, cplx c = 1.0);
  /// The coordinate z_i.
  static Polynomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  int degree_bound() const { return degree_; }
  /// Largest |alpha| with |coeff| > tol, or -1 for the zero polynomial.
  int degree(double tol = 0.0) const;

  const std::vector<cplx>& coeffs() const { return c_; }
  std::vector<cplx>& coeffs() { return c_; }
  cplx coeff(const MultiIndex& alpha) const;
  cplx& coeff(const MultiIndex& alpha);

  cplx operator()(std::span<const cplx> z) const;
  cplx operator()(const Point& z) const { return (*this)(std::span<const cplx>(z)); }

  /// Same polynomial stored with another degree bound; dropping nonzero
  /// coefficients is an error unless truncate is set.
  Polynomial with_degree_bound(int d, bool truncate = false) const;

  /// Largest coefficient modulus.
  double max_abs_coeff() const;

 private:
  int nvars_ = 1;
  int degree_ = 0;
  std::vector<cplx> c_{cplx(0.0)};
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(cplx s, const Polynomial& p);
Polynomial scale(const Polynomial& p, cplx s);

Polynomial derivative(const Polynomial& p, const MultiIndex& alpha);

/// (p (x) q)(z1, z2) = p(z1) q(z2) in nvars(p) + nvars(q) variables.
Polynomial tensor_embed(const Polynomial& p, const Polynomial& q);

/// max_alpha |coeff_p(alpha) - coeff_q(alpha)| over the union of supports.
double max_coeff_distance(const Polynomial& p, const Polynomial& q);

/// Values of all monomials |alpha| <= d at z, in graded-lex order.
std::vector<cplx> monomial_values_at(std::span<const cplx> z, int d);

void to_json(nlohmann::json& j, const Polynomial& p);
void from_json(const nlohmann::json& j, Polynomial& p);

}  // namespace nprox
