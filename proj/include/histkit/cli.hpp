#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace histkit::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIoError = 2;
inline constexpr int kInvalidParams = 3;
inline constexpr int kUnknownName = 4;
inline constexpr int kAlgorithmFailure = 5;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace histkit::cli
