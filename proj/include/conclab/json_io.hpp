#pragma once

#include <json.hpp>

#include "conclab/boundary_forms.hpp"
#include "conclab/ccomplex.hpp"
#include "conclab/diagrams.hpp"
#include "conclab/int_matrix.hpp"
#include "conclab/laurent.hpp"
#include "conclab/rat_matrix.hpp"
#include "conclab/representations.hpp"
#include "conclab/s_calculus.hpp"

namespace conclab {

// Wire formats, chosen so every value round-trips exactly:
//   integer / rational matrix  ->  array of arrays of decimal strings
//                                  (rationals as "p/q", integers as "p")
//   Laurent polynomial         ->  object {exponent: coefficient} with the
//                                  exponent as a string ("3", or "1,-2" for
//                                  two variables) and the coefficient a JSON
//                                  number when it fits in 64 bits, else a
//                                  decimal string
// Parsers also accept plain JSON numbers wherever a decimal string is
// expected; emitters always produce strings.

nlohmann::json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LaurentPoly1& p);
LaurentPoly1 laurent1_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LaurentPoly2& p);
LaurentPoly2 laurent2_from_json(const nlohmann::json& j);

Int int_from_json(const nlohmann::json& j);
nlohmann::json int_to_json(const Int& v);
Rat rat_from_json(const nlohmann::json& j);
nlohmann::json rat_to_json(const Rat& v);

// {m, sizes: [n_1..n_m], blocks: [[matrix per (i,j)]]}
nlohmann::json to_json(const BoundaryPairMatrix& x);
BoundaryPairMatrix boundary_pair_from_json(const nlohmann::json& j);

// {kind: "component_congruence", matrices: [...]}
nlohmann::json to_json(const ComponentCongruence& c);
ComponentCongruence component_congruence_from_json(const nlohmann::json& j);

// {A, Aprime}
nlohmann::json to_json(const CComplexData& d);
CComplexData ccomplex_from_json(const nlohmann::json& j);

// {dim, projectors, action, form}; parsing revalidates every invariant
nlohmann::json to_json(const Representation& rep);
Representation representation_from_json(const nlohmann::json& j);

// {size, X, O} with 1-based rows, matching the grid text format
nlohmann::json to_json(const GridDiagram& g);
GridDiagram grid_from_json(const nlohmann::json& j);

// {kind: "finite", values} or {kind: "range", lo, hi, parity} with null for
// a missing bound / no parity filter
nlohmann::json to_json(const ValueSet& s);
ValueSet valueset_from_json(const nlohmann::json& j);

// {links: [{name, components}], constraints: [{kind, ...}]}
nlohmann::json to_json(const SConstraintSystem& sys);
SConstraintSystem constraint_system_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SolveResult& r);
nlohmann::json to_json(const WhiteheadReport& r);

}  // namespace conclab
