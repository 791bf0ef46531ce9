#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a check failed or the bound was violated
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out` unless --output names a file; diagnostics go to `err`. Matrix input is
/// read from --input, or from `in` when --input is absent.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

int main(int argc, char** argv);

}  // namespace sbound::cli
