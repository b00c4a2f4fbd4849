#pragma once

#include <string>

#include <json.hpp>

#include "ballotope/geometry.hpp"
#include "ballotope/rational.hpp"

namespace ballotope {

using Json = nlohmann::ordered_json;

constexpr const char* kEnvelopeSchemaVersion = "1";

inline Json rational_json(const Rational& r) { return rational_str(r); }

inline Json gap_vector_json(const GapVector& v) {
    Json arr = Json::array();
    for (const auto& x : v.entries()) arr.push_back(rational_str(x));
    return arr;
}

/// Every command emits exactly one of these on stdout in JSON mode.
inline Json make_envelope(const std::string& command, Json params, Json result, double timing_ms) {
    Json env;
    env["schema_version"] = kEnvelopeSchemaVersion;
    env["command"] = command;
    env["params"] = std::move(params);
    env["result"] = std::move(result);
    env["timing_ms"] = timing_ms;
    return env;
}

}  // namespace ballotope
