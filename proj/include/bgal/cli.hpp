#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bgal {

/// Exit codes: 0 success, 1 solver failure (no convergence, singular system,
/// degree tolerance not met), 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bgal
