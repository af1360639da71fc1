#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace c1p {

/// Exit statuses of `c1p-lab`.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInequivalent = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudget = 3;
inline constexpr int kDisagreement = 4;
}  // namespace exit_code

/// Runs `c1p-lab` with `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c1p
