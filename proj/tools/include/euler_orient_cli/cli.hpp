#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitResourceCap = 3;

// Runs one invocation; args excludes the program name. Reports go to `out`
// unless --out is given, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eo::cli
