#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "mulhopf/check.hpp"

namespace mulhopf::cli {

// Default randomization seed when neither --seed nor MULHOPF_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 20260814;

// Executes one command against a parsed instance description and returns the
// report. Throws ParseError-adjacent exceptions (std::invalid_argument,
// PreconditionUnmet, nlohmann::json::exception) for malformed input or
// unmeetable preconditions.
nlohmann::ordered_json run_command(const nlohmann::json& spec, const std::string& command,
                                   std::uint64_t seed, const std::string& laws_filter);

// Structural validation of a report document.
bool validate_report(const nlohmann::json& report, std::string* error = nullptr);

// Renders a report as plain text.
std::string report_text(const nlohmann::ordered_json& report);

// Exit status from a report: 0 when every law passed, 1 otherwise.
int report_status(const nlohmann::ordered_json& report);

// Full command-line entry point; returns the process exit code
// (0 pass, 1 law failure, 2 parse error or unmet precondition).
int run(int argc, const char* const* argv);

}  // namespace mulhopf::cli
