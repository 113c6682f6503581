#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coset::cli {

/// Exit codes: 0 success or passing verification, 1 failed verification,
/// 2 usage error (bad flags, labels or model parameters).
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coset::cli
