#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sposet::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIoOrParse = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kGluingSpec = 3;
inline constexpr int kInternal = 4;

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sposet::cli
