#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orbitq/serialize.hpp"

namespace orbitq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitVerificationFailed = 2;

/// One CLI invocation after flag/config merging: the verb, its parameters
/// as a JSON object, and the output format ("json" or "table").
struct CommandRequest {
  std::string verb;
  Json params = Json::object();
  std::string output_format = "json";
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;  ///< serialised result (stdout)
  std::string err;  ///< serialised error (stderr), empty on success
};

const std::vector<std::string>& verbs();

/// Checks the verb, the output format and every parameter against the verb's
/// schema. Throws orbitq::Error carrying the offending field path.
void validate(const CommandRequest& req);

/// Validates, dispatches and serialises. Never throws.
CommandResult run(const CommandRequest& req);

/// Plain-text rendering of a JSON result.
std::string render_table(const Json& j);

/// Flag-string parsers: "3", "1,1" or "[1,1]"; factors as "2;3", "1,0;0,1" or JSON.
Json parse_weight_text(std::string_view text, const std::string& field);
Json parse_factors_text(std::string_view text, const std::string& field);

}  // namespace orbitq::cli
