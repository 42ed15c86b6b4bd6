// The `alcnr` command-line front end, callable in-process.

#ifndef ALCNR_CLI_HPP_
#define ALCNR_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace alcnr::cli {

// Exit codes.
inline constexpr int kPositive = 0;     // SAT / true / valid
inline constexpr int kNegative = 1;     // UNSAT / false / invalid
inline constexpr int kUnknown = 2;      // a resource guard fired
inline constexpr int kInputError = 3;   // bad arguments or input
inline constexpr int kCheckFailed = 4;  // oracle contradiction or failed self-check

/// `args[0]` is the program name. `in` backs the `-` path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace alcnr::cli

#endif  // ALCNR_CLI_HPP_
