#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrf::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`; diagnostics and runtime statistics go to `err`.
///
/// Exit codes: 0 property holds or object found; 1 property violated,
/// unsat, refuted, or inconclusive (the report body says which); 2 usage or
/// input-format error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrf::cli
