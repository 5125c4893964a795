#pragma once

#include <ostream>

namespace lpakit {

/// Runs the lpakit command line and returns its exit status: 0 on success,
/// 2 for input or validation errors, 3 when an internal verification fails.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpakit
