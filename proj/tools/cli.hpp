#pragma once

#include <ostream>

namespace sternkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the sternkit tool. Exit codes: 0 success, 1 a blocking
/// counterexample or b-file mismatch, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sternkit::cli
