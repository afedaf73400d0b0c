#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ramsey {

// sorted keys (object keys are kept ordered), LF endings, trailing newline
std::string canonical_dump(const nlohmann::json& j);

std::uint64_t fnv1a64(std::string_view data);

// FNV-1a 64 over the canonical dump, as 16 hex digits
std::string result_digest(const nlohmann::json& result);

std::string tool_version();

// run manifest: what was run, with what inputs, and a digest of the result;
// wall time lives here and stays outside the digest
nlohmann::json make_manifest(const std::string& subcommand, const std::vector<std::string>& argv,
                             bool seeded, std::uint64_t seed, int jobs, double wall_ms,
                             const nlohmann::json& result);

}
