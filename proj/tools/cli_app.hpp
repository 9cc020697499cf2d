#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace troplat::cli {

/// Full command dispatch, separated from main() so tests can drive it.
/// Returns 0 on success, 1 on domain errors (machine-readable error JSON on
/// out), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace troplat::cli
