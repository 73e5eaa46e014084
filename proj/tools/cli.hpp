#ifndef TRIFREE_TOOLS_CLI_HPP
#define TRIFREE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace trifree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitRejected = 2;  // stage-1 reject or verify mismatch

/// Entry point shared by main() and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace trifree::cli

#endif  // TRIFREE_TOOLS_CLI_HPP
