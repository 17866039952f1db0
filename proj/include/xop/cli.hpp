#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xop::cli {

// Runs one xop invocation; args excludes the program name.
// Exit codes: 0 success, 1 verification mismatch or failed computation,
// 2 usage error, 3 parameter or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace xop::cli
