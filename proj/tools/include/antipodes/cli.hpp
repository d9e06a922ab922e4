#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antipodes::cli {

// Exit codes besides 0.
inline constexpr int kExitError = 1;
inline constexpr int kExitCertificateViolation = 2;

// Runs the command line `args` (program name first). Artifacts named by
// options go to files; everything else goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antipodes::cli
