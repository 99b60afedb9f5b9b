#pragma once

#include <ostream>

namespace boxball::cli {

/// Runs the boxball command line. Exit codes: 0 success, 1 violations or stepper
/// divergence, 2 usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace boxball::cli
