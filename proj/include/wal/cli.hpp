#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wal {

/// Exit codes: 0 ok, 1 domain error, 2 budget or bound exhausted, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wal
