#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nprox/measure.hpp"
#include "nprox/points.hpp"
#include "nprox/projector.hpp"

namespace nprox {

/// Taylor projector at a: J_j = {D^alpha(a) : |alpha| = j}.
NewtonProjector taylor(const Point& a, int d, const BuildOptions& opt = {});

/// Univariate Lagrange projector with J_j = {delta_{a_j}}. Uses the first d + 1
/// nodes (all of them when d < 0); rejects repeated nodes.
NewtonProjector lagrange(const std::vector<cplx>& nodes, int d = -1, const BuildOptions& opt = {});

/// Kergin projector: J_j = {Kergin(alpha; z_0..z_j) : |alpha| = j}. Nodes may repeat.
NewtonProjector kergin(const std::vector<Point>& nodes, int d, const BuildOptions& opt = {});

/// Orthogonal projector: J_j = {<., b_alpha> : |alpha| = j}, b from Gram-Schmidt.
NewtonProjector orthogonal(const MeasurePtr& m, int d, const BuildOptions& opt = {});

/// Named univariate node families: "chebyshev", "equiangular" (both Leja
/// ordered unless order == "natural"), "integer", "leja", "r_leja".
/// Returns exactly count nodes.
std::vector<cplx> family_nodes(const std::string& family, std::size_t count, const std::string& order = "leja");

/// Measure description: {"kind": "circle"|"chebyshev", "nodes": m} or
/// {"kind": "product", "left": ..., "right": ...}.
MeasurePtr measure_from_json(const nlohmann::json& j);

/// Projector description, with "degree" overriding the spec's own degree:
///   {"kind": "taylor", "center": [...], "degree": d}
///   {"kind": "lagrange", "nodes": [...] | "family": name, "order": ..., "degree": d}
///   {"kind": "kergin", "nodes": [[...], ...] | "family": "leja_planar", "degree": d}
///   {"kind": "orthogonal", "measure": {...}, "degree": d}
///   {"kind": "product", "left": {...}, "right": {...}, "degree": d}
NewtonProjector projector_from_json(const nlohmann::json& spec, int degree = -1, const BuildOptions& opt = {});

/// Number of variables of the projector a spec describes.
int spec_nvars(const nlohmann::json& spec);

}  // namespace nprox
