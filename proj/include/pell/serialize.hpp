#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "pell/agm.hpp"
#include "pell/piformulas.hpp"
#include "pell/precision.hpp"
#include "pell/report.hpp"

// JSON and CSV renderings. Real values are written as decimal strings carrying
// every digit of their precision.
namespace pell {

// {"kind", "rows": [{"n", "a", "b", "c"}, ...], "limit", "iterations", "bits"}
nlohmann::ordered_json to_json(const AgmTrace& trace, const PrecisionContext& ctx);

// Header "n,a,b,c", one line per row, then "limit,<M>,<M>,0".
std::string to_csv(const AgmTrace& trace, const PrecisionContext& ctx);

// {"method", "digits", "value", "iterations", "bits"}. With digits > 0 the
// value is truncated to that many significant digits.
nlohmann::ordered_json to_json(const DigitsResult& result);

// {"identity", "inputs": {...}, "lhs", "rhs", "abs_defect", "rel_defect",
//  "tol", "pass"}
nlohmann::ordered_json to_json(const IdentityReport& report);
nlohmann::ordered_json to_json(std::span<const IdentityReport> reports);

// Significant digits truncated toward zero; full precision when digits <= 0.
std::string digits_text(const Real& value, int digits);

}  // namespace pell
