#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace malcev {

// Runs one CLI command. Exit codes: 0 success / affirmative verdict,
// 1 negative verdict or failed verification, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace malcev
