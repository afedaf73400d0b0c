#include "ramsey/json_report.hpp"

#include <array>

namespace ramsey {

std::string canonical_dump(const nlohmann::json& j) {
    return j.dump(2) + "\n";  // nlohmann sorts object keys; dump emits LF only
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string result_digest(const nlohmann::json& result) {
    std::uint64_t h = fnv1a64(canonical_dump(result));
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string tool_version() { return "ramsey-mult 1.0.0"; }

nlohmann::json make_manifest(const std::string& subcommand, const std::vector<std::string>& argv,
                             bool seeded, std::uint64_t seed, int jobs, double wall_ms,
                             const nlohmann::json& result) {
    nlohmann::json manifest;
    manifest["subcommand"] = subcommand;
    manifest["argv"] = argv;
    if (seeded)
        manifest["seed"] = seed;
    else
        manifest["seed"] = nullptr;
    manifest["jobs"] = jobs;
    manifest["versions"] = {{"tool", tool_version()}};
    manifest["wall_ms"] = wall_ms;
    manifest["digest"] = result_digest(result);
    return manifest;
}

}
