// cli.hpp
// Entry point of the `barrett` command-line tool, callable in-process so
// tests can drive it with captured streams.
//
// Exit codes are a stable contract:
//   0 success, 1 verification mismatch, 2 usage/domain error, 3 resource error.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "barrett/report.hpp"
#include "barrett/sieve.hpp"

namespace barrett {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitUsage = 2,
    kExitResource = 3,
};

struct RunConfig {
    unsigned threads = 1;
    std::uint64_t sieve_cap = kDefaultSieveCap;
    OutputFormat format = OutputFormat::Human;
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace barrett
