#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "finsupp/profile.hpp"
#include "finsupp/step_function.hpp"
#include "finsupp/suite.hpp"
#include "finsupp/theorems.hpp"

namespace finsupp {

// 17 significant digits: enough to round-trip any double exactly.
std::string fmt_double(double x);

// {"pieces":[{"t0":..,"t1":..,"v":..},...],"tail":{"T":..,"c":..,"gamma":..}|null}
std::string profile_to_json(const RearrangementProfile& f);
// {"atoms":[{"a":..,"b":..,"v":..},...]}
std::string step_to_json(const StepFunction& f);

// Either of the two shapes above, told apart by the "atoms" key.
// Non-finite numbers may be spelled "inf"/"-inf"/"nan" (strings).
struct ParsedInput {
  std::optional<RearrangementProfile> profile;
  std::optional<StepFunction> step;
};
ParsedInput parse_input_json(const std::string& text);

// Header "x,value"; strictly increasing uniformly spaced x, spacing
// inferred from the first two rows (>= 2 rows required).  A grid
// mismatch beyond 1e-9 relative is a parse error (std::runtime_error).
SampledFunction parse_samples_csv(const std::string& text);

std::string report_to_json(const CheckReport& rep);
std::string entry_to_json(const SuiteEntry& e);
std::string suite_to_json(const SuiteResult& res, std::uint64_t seed);

}  // namespace finsupp
