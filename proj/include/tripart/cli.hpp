#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tripart::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kContractViolation = 3;

/// args[0] is the program name, as in argv.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tripart::cli
