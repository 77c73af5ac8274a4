#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regbound {

// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitOther = 1,
    kExitParse = 2,
    kExitSizeCap = 3,
    kExitInvalidCertificate = 4,
};

// Runs the tool with argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace regbound
