#pragma once

// Command-line front end. `run` is the whole program minus process
// plumbing, so tests can drive it with argument vectors and capture output.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nomaec::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // lemmas: at least one check failed
  kExitUsage = 2,
  kExitDomain = 3,
  kExitAccuracy = 4,
  kExitIo = 5,
};

/// Default directory for CSV output.
inline constexpr const char* kOutputDirEnv = "NOMAEC_OUTPUT_DIR";

/// Comma list "a,b,c" or inclusive range "start:stop:step". Throws
/// std::invalid_argument on malformed or empty input.
std::vector<double> parse_grid(std::string_view text);

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nomaec::cli
