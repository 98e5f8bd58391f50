#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ms2c {

/// Exit codes of the ms2col tool.
enum ExitCode : int {
    kExitYes = 0,
    kExitNo = 1,
    kExitUsage = 2,
    kExitCap = 3,
};

/// Entry point of the ms2col tool; argv[0] is the program name.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ms2c
