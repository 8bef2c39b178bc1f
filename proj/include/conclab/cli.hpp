#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conclab {

// Exit codes, a stable contract:
//   0 success, 1 verification failure, 2 unknown input, 3 parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitParse = 3;

// The whole command-line driver behind the `conclab` binary; `args` excludes
// the program name. Everything written to `out`/`err` is deterministic for a
// fixed argument list (including --seed), so identical invocations produce
// byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conclab
