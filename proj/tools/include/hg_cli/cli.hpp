#ifndef HG_CLI_CLI_HPP
#define HG_CLI_CLI_HPP

namespace hg::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;       // solved, or a "yes" answer
inline constexpr int kExitNo = 1;       // decision answer "no", failed verification
inline constexpr int kExitError = 2;    // bad usage, unreadable input, failed bench rows
inline constexpr int kExitTimeout = 3;

int run(int argc, char** argv);

}  // namespace hg::cli

#endif  // HG_CLI_CLI_HPP
