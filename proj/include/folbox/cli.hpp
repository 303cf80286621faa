#ifndef FOLBOX_CLI_HPP_
#define FOLBOX_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace folbox::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // non-thesis, false, rejected proof
inline constexpr int kFragment = 2;
inline constexpr int kUsage = 64;
inline constexpr int kInput = 65;

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folbox::cli

#endif  // FOLBOX_CLI_HPP_
