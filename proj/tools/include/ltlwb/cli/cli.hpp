#pragma once

#include <iosfwd>

namespace ltlwb::cli {

// Exit codes of the command-line tool.
constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

// Runs `ltlwb <command> ...`; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ltlwb::cli
