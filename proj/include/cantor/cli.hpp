#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cantor::cli {

// Exit codes: 0 pass, 1 refuted, 2 inconclusive, 3 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
