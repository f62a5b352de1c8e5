#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "multizero/engine.hpp"
#include "multizero/witness.hpp"

namespace multizero {

using Json = nlohmann::json;

/// Run metadata printed next to the verdict.
struct RunInfo {
    std::string input_path;
    std::string format;
    long precision = default_precision;
    std::size_t threads = 1;
    std::optional<std::uint64_t> seed;
    bool witness_requested = true;
    double wall_seconds = 0.0;
};

Json witness_to_json(const Witness& w);
/// Accepts a bare witness object or a full report carrying one under "witness".
Witness witness_from_json(const Json& j);

Json verification_to_json(const VerificationReport& report);

/// Per-certificate objects for reports: sigma, S, Lambda-sets, D, the sign conditions, rho, delta, trace.
Json certificate_to_json(const Certificate& cert, const Reduction& red, std::size_t species);

Json verdict_to_json(const Verdict& verdict, const AugmentedVerticalSystem& sys, const RunInfo& info);

/// Human-readable rendering of the same data as verdict_to_json.
std::string verdict_to_text(const Verdict& verdict, const AugmentedVerticalSystem& sys, const RunInfo& info);

}  // namespace multizero
