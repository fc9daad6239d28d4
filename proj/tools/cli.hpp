#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadfield::cli {

// Exit codes: 0 success, 1 usage error, 2 library error (one-line JSON on `out`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadfield::cli
