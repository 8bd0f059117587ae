#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "morin/thom.hpp"

namespace morin::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kInternal = 3,
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "A4" -> 4; throws std::invalid_argument for anything else.
int parse_singularity(const std::string& name);

std::string thom_result_json(const ThomResult& result);
std::string expansion_json(const SchurExpansion& e);

} // namespace morin::cli
