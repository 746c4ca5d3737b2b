#ifndef GMOTZKIN_TOOLS_CLI_HPP
#define GMOTZKIN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gmotzkin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmotzkin::cli

#endif  // GMOTZKIN_TOOLS_CLI_HPP
