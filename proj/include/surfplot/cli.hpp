#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfplot {

/// Entry point of the surfplot command. Returns 0 on success, 2 on a usage
/// error and 1 when rendering or writing fails. Output goes to `out` unless
/// --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfplot
