#ifndef ETAZETA_CLI_HPP
#define ETAZETA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace etazeta {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the eta-zeta command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etazeta

#endif  // ETAZETA_CLI_HPP
