#pragma once

#include <json.hpp>
#include <string>

#include "qsymm/poly_matrix.hpp"

namespace qsymm {

using Json = nlohmann::json;

// {"vars": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}
Json poly_to_json(const LaurentPoly& p);
// Uses the vars list in the document; when `table` is given it must name the
// same variables in the same order and is reused (keeps identity for ==).
LaurentPoly poly_from_json(const Json& j, const VarTablePtr& table = nullptr);

// {"num": <poly>, "den": <poly>}
Json ratfunc_to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const Json& j, const VarTablePtr& table = nullptr);

// {"rows": r, "cols": c, "vars": [...], "entries": [<ratfunc>...]} row-major
Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j, const VarTablePtr& table = nullptr);

// Coefficient table: header = variable names then "num","den"; one row per term.
std::string poly_to_csv(const LaurentPoly& p);

}  // namespace qsymm
