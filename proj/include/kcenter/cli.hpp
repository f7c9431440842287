#pragma once

#include <ostream>

namespace kcenter::cli {

enum ExitCode : int { ok = 0, input_error = 1, promise_violation = 2, falsified = 3 };

/// Entry point shared by the executable and the in-process tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kcenter::cli
