#pragma once

#include <nlohmann/json.hpp>

#include "burnside/action.hpp"
#include "burnside/counting.hpp"
#include "burnside/verifiers.hpp"

// Stable, key-ordered JSON views of the report types. Counts are emitted as
// decimal strings so no value is ever rounded; small structural parameters
// (n, q, p, j, group order) are JSON numbers.

namespace burnside {

using Json = nlohmann::ordered_json;

Json to_json(const Count& value);
Json to_json(const Coloring& coloring);
Json to_json(const FixedPointTable& table);
Json to_json(const OrbitReport& report);
Json to_json(const CongruenceReport& report);
Json to_json(const VerificationResult& result);

}  // namespace burnside
