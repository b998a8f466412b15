#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loops::cli {

// Command-line front end. args excludes the program name. Exit codes:
// 0 success, 1 validation failure (bad file, failed precondition),
// 2 resource cap exceeded.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace loops::cli
