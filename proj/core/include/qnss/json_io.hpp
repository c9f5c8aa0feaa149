#pragma once

// JSON mirrors of the core value types. Rationals are strings "p/q" (or
// "p"), Gaussian rationals {"re","im"}, quaternions 4-element arrays.
// Polynomials use {"nvars": d, "terms": [{"e": [...], "c": coef}, ...]}
// with terms in canonical order, so dumps are deterministic.

#include <nlohmann/json.hpp>

#include "qnss/groebner.hpp"

namespace qnss::json {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const GaussQ& z);
json to_json(const QuatQ& q);
json to_json(const Monomial& m);
json to_json(const MPoly& p);
json to_json(const QPoly& p);
json to_json(const VecPoly& v);
json to_json(const MatPoly& m);
json to_json(const ModuleOrder& order);
/// Generators, order, reduced flag and (when present) cofactors.
json to_json(const ModuleBasis& basis);

Rational rational_from_json(const json& j);
GaussQ gauss_from_json(const json& j);
QuatQ quat_from_json(const json& j);
MPoly mpoly_from_json(const json& j);
QPoly qpoly_from_json(const json& j);
VecPoly vecpoly_from_json(const json& j);
MatPoly matpoly_from_json(const json& j);
ModuleOrder order_from_json(const json& j);
ModuleBasis basis_from_json(const json& j);

}  // namespace qnss::json
