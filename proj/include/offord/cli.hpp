#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace offord::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kCapacity = 3 };

// Runs one command line; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace offord::cli
