#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qito {

/// Runs the command line `args` (without the program name). Returns 0 when
/// every requested check passes, 1 on a failed check, 2 on a usage or domain
/// error; usage text goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qito
