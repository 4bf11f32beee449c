#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigtool {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitInput = 2;

/// argv-style entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sigtool
