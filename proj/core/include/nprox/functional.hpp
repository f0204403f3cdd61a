#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nprox/measure.hpp"
#include "nprox/polynomial.hpp"
#include "nprox/test_function.hpp"

namespace nprox {

struct Functional;
using FunctionalPtr = std::shared_ptr<const Functional>;

/// f -> f(a).
struct PointEval {
  Point a;
};

/// f -> D^alpha f(a).
struct DerivativeEval {
  MultiIndex alpha;
  Point a;
};

/// f -> int_{S_k} D^alpha f(z_0 + sum_i t_i (z_i - z_0)) dt, k = |alpha|.
struct KerginCondition {
  MultiIndex alpha;
  std::vector<Point> nodes;
};

/// f -> int f conj(b) dm.
struct InnerProduct {
  Polynomial b;
  MeasurePtr measure;
};

/// left (x) right on the product of their variable spaces.
struct TensorPair {
  FunctionalPtr left;
  FunctionalPtr right;
};

struct Functional {
  std::variant<PointEval, DerivativeEval, KerginCondition, InnerProduct, TensorPair> v;

  int nvars() const;
  std::string describe() const;
};

Functional point_eval(Point a);
Functional derivative_eval(MultiIndex alpha, Point a);
Functional kergin_condition(MultiIndex alpha, std::vector<Point> nodes);
Functional inner_product(Polynomial b, MeasurePtr m);
Functional tensor(const Functional& mu, const Functional& nu);

struct QuadratureOptions {
  /// Exactness of the simplex rule for Kergin conditions on functions without
  /// a closed form; negative selects 2|alpha| + 5.
  int kergin_exactness = -1;
  /// Upper bound on simplex rule size; the exactness is lowered to fit.
  std::size_t max_points = 200000;
};

/// mu(e_gamma) for all |gamma| <= d in graded-lex order.
std::vector<cplx> monomial_values(const Functional& mu, int d);

cplx apply_to_polynomial(const Functional& mu, const Polynomial& p);

/// Exact for point/derivative evaluation, for Kergin conditions on sums of
/// ridge functions, and for tensor pairs on block-separable functions;
/// otherwise a deterministic derivative-point rule.
cplx apply_to_function(const Functional& mu, const TestFunction& f, const QuadratureOptions& opt = {});

/// One term w * D^alpha f(x) of a derivative-point rule.
struct RuleTerm {
  cplx weight;
  MultiIndex alpha;
  Point x;
};

std::vector<RuleTerm> to_rule(const Functional& mu, const QuadratureOptions& opt = {});

/// Throws PoleError when a pole of f meets the support of mu.
void check_poles(const Functional& mu, const TestFunction& f);

/// Tagged-union JSON. Inner products serialize the basis polynomial and the
/// measure's domain tag only.
nlohmann::json functional_to_json(const Functional& mu);

}  // namespace nprox
