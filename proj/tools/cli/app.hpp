#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charforge::cli {

/// Exit codes: 0 success, 1 unreadable input or bad arguments, 2 a domain
/// error (or a certificate that fails verification), 3 an internal
/// invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charforge::cli
