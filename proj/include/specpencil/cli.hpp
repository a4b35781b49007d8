// The specpencil command line.  Exit codes: 0 all checks passed, 1 a
// mathematical check failed, 2 usage or input error.
#pragma once

#include <atomic>
#include <ostream>
#include <string>
#include <vector>

namespace specpencil::cli {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// args excludes the program name.  `cancel`, when given, interrupts the
/// long scans, which then report their completed prefix.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel = nullptr);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel = nullptr);

}  // namespace specpencil::cli
