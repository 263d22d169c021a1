#pragma once

#include <string>

#include "json.hpp"

#include "treenorm/rational.hpp"

namespace treenorm {

// Reports are JSON objects with a stable key order. Wall time and the
// timestamp are the only non-reproducible values; both live under the
// single "timing" key so golden tests can mask one field.
using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "treenorm 0.1.0";

Json make_run_report(const std::string& command, Json config, Json results,
                     unsigned sqrt_digits, double wall_time_ms);

// {"sq": "<exact rational>", "value": "<decimal or exact rendering>"}
// The decimal re-squared stays within 1e-40 relative of the rational at the
// default 50 digits.
Json norm_value_json(const Rational& value_sq, unsigned digits);

// Exact rendering when the square root is rational ("2", "3/2"), decimal
// otherwise. This is what the CLI prints for norms.
std::string render_sqrt(const Rational& value_sq, unsigned digits);

std::string current_timestamp_utc();

}  // namespace treenorm
