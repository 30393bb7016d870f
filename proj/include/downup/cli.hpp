#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace downup::cli {

// Runs one command; args excludes the program name. Exit codes: 0 success,
// 1 domain error (reported as {"error": kind, "message": ...}), 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace downup::cli
