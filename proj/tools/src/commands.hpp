#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qca::cli {

// Runs one qca invocation. Exit codes: 0 ok, 1 computation failure (error JSON on out), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qca::cli
