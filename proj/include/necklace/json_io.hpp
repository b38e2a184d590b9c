#pragma once

#include <json.hpp>

#include "necklace/closure.hpp"
#include "necklace/matrix.hpp"

namespace necklace {

using Json = nlohmann::ordered_json;

// {"dim": d, "entries": [[scalar-string, ...], ...]}
Json matrix_to_json(const Matrix& m);
// Throws ConfigParseError on malformed input.
Matrix matrix_from_json(const Json& j);
Json closure_to_json(const ClosureResult& r);

}  // namespace necklace
