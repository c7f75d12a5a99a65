#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hyperstream::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInputError = 3;
inline constexpr int kResourceError = 4;
inline constexpr int kRuntimeError = 5;

// Parses "key=v1,v2;key2=v3" into key -> values. Keys keep their order of
// appearance in the grid expansion. Throws ConfigError on malformed text.
std::vector<std::pair<std::string, std::vector<std::string>>> parse_sweep(const std::string& text);
// Cartesian product of a parsed sweep, first key varying slowest.
std::vector<std::map<std::string, std::string>> expand_sweep(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& sweep);

// Seed used when --seed is absent: HYPERSTREAM_SEED if set, else 1.
std::uint64_t default_seed();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperstream::cli
