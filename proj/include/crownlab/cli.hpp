#pragma once

#include <ostream>

namespace crownlab::cli {

inline constexpr int kOk = 0;
inline constexpr int kInvalidCertificate = 1;
inline constexpr int kIncomplete = 2;
inline constexpr int kInvalidArguments = 3;
inline constexpr int kGuardExceeded = 4;

/// Runs one command line (argv[0] is the program name). Reports go to `out`
/// as JSON, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crownlab::cli
