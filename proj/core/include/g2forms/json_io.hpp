#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "g2forms/classify.hpp"
#include "g2forms/kform.hpp"
#include "g2forms/liealg.hpp"
#include "g2forms/x7.hpp"

namespace g2f {

using Json = nlohmann::ordered_json;

// {"dim": n, "degree": k, "terms": [{"indices": [...], "coeff": "..."}]}
// Indices 1-based and strictly increasing; a duplicate tuple is an input
// error.
KForm kform_from_json(const Json& j);
Json kform_to_json(const KForm& w);

// {"verdict": "...", "signature": [p, q], "stabilizer_dim": d, "b_rank": r}
Json type_report_to_json(const TypeReport& r);

// {"dim": n, "brackets": [{"i": i, "j": j, "coeffs": ["...", ...]}]};
// omitted pairs are zero brackets.  The Jacobi identity is checked on load.
LieAlgebra lie_algebra_from_json(const Json& j);

Json verify_run_to_json(const VerifyRun& run);
std::string verify_run_to_text(const VerifyRun& run);

Json load_json_file(const std::string& path);

}  // namespace g2f
