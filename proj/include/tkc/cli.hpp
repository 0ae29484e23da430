#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tkc {

struct RunConfig {
    std::string input;
    bool directed = false;
    std::size_t k = 1;
    std::string variant = "auto";
    std::string measure = "closeness";
    std::string output = "tsv";
    bool stats = false;
    int threads = 1;
};

/// Exit codes of run().
inline constexpr int exitOk = 0;
inline constexpr int exitFailure = 1; // unreadable or malformed input
inline constexpr int exitUsage = 2;

/**
 * Command-line entry point; args excludes the program name. Rankings go to
 * out, diagnostics and --stats to err.
 */
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace tkc
