#pragma once

#include "isharp/cone.hpp"
#include "isharp/graded.hpp"
#include "isharp/hf_model.hpp"
#include "isharp/laurent.hpp"
#include "isharp/staircase.hpp"
#include "isharp/torsion.hpp"

#include <nlohmann/json.hpp>

namespace isharp {

using Json = nlohmann::ordered_json;

// Laurent polynomial as an association list [[exponent, coefficient], ...]
// sorted by descending exponent.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// { "gradings": [g0, g1, ...] }
Json module_to_json(const GradedModule& v);
GradedModule module_from_json(const Json& j);

// Sparse { "rows": R, "cols": C, "entries": [[r, c, "p/q"], ...] } with
// exact fraction strings.
Json matrix_to_json(const RatMat& m);
RatMat matrix_from_json(const Json& j);

// Domain/codomain modules, "shift" (integer or "mixed"), and the matrix.
Json graded_map_to_json(const GradedMap& f);
GradedMap graded_map_from_json(const Json& j);

// { "exponents": [...], "vertices": [gradings...], "arrows":
//   [{ "from": i, "to": j, "length": r, "sign": "+"|"-" }, ...] }
Json staircase_to_json(const Staircase& s);
Staircase staircase_from_json(const Json& j);

Json cone_report_to_json(const ConeReport& r);
Json certificate_to_json(const TorsionCertificate& c);
Json profile_to_json(const GradedDimProfile& p);
Json counting_report_to_json(const CountingLemmaReport& r);
Json octahedral_report_to_json(const OctahedralReport& r);
Json model_comparison_to_json(const ModelComparison& m);

}  // namespace isharp
