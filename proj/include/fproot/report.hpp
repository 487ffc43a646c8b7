#pragma once

#include <json.hpp>

#include "fproot/content.hpp"
#include "fproot/invariants.hpp"

namespace fproot {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::json;

Json ideal_to_json(const Ideal& ideal);
Json basis_to_json(const Ideal& ideal);  // the reduced basis, increasing heads
Json chain_to_json(const ChainReport& chain);
Json threshold_to_json(const ThresholdResult& result);

// Assembles the report envelope. `timing_ms` is attached by the caller and is
// the only nondeterministic key.
Json make_report(const std::string& command, const Ring& ring, Json inputs, Json result,
                 Json witnesses = Json::object());

// Human-readable rendering of a report (the non-JSON CLI output).
std::string render_text(const Json& report);

}  // namespace fproot
