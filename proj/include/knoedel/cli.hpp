#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knoedel::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

inline constexpr unsigned long kDefaultMaxSteps = 200;
inline constexpr unsigned long kMaxSeriesOrder = 200;

/// Step cap for table/coeff/simulate; KNOEDEL_MAX_STEPS overrides the default.
unsigned long max_steps_cap();

/// Entry point behind the `knoedel` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knoedel::cli
