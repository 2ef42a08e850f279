#pragma once

#include <iosfwd>

namespace lqw::cli {

// Exit statuses of the `lqw` tool.
inline constexpr int kOk = 0;
inline constexpr int kHypothesisRejected = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kIoFailure = 3;

// Entry point shared by the binary and the tests. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lqw::cli
