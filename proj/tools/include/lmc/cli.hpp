#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitInternal = 70;

// args excludes the program name. `in` backs FILE arguments given as "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lmc::cli
