#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mshopf {

// Command-line front end. Exit codes: 0 success, 1 parse error (file or
// flags), 2 precondition violation, 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mshopf
