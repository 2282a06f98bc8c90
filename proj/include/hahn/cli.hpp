#ifndef HAHN_CLI_HPP
#define HAHN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hahn {

/// Command dispatch for the hahncalc tool. Returns the process exit code:
/// 0 on success, 1 on domain/configuration errors, 2 on usage and syntax
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hahn

#endif
