#pragma once

#include <string>

#include <json.hpp>

#include "ado/lawrence.hpp"

namespace ado {

// ScalarExt wire format:
//   { "tExp": int, "sLow": int, "num": [[rat, ...], ...], "den": [...] }
// Each inner list is the CycScalar coefficient vector of one s-power, listed
// from the stored lowest exponent; rationals are "p/q" strings. The
// denominator's lowest exponent is pinned to 0 by the canonical form; sLow
// records the numerator's lowest exponent so the value round-trips.
nlohmann::json to_json(const ScalarExt& x);
ScalarExt scalar_from_json(const nlohmann::json& j, int N);

nlohmann::json to_json(const HomologyClass& cls);
HomologyClass class_from_json(const nlohmann::json& j);

// Regression fixture location: the ADO_FIXTURE_DIR environment variable wins,
// otherwise the compiled-in default (the repository's data/fixtures).
std::string fixture_dir();
std::string fixture_path(int n, int N);

}  // namespace ado
