#pragma once

#include <iosfwd>

namespace dunkl::cli {

/// Runs `dunkl <eval|verify> <subject> [flags]`. Returns the process exit
/// code: 0 success, 1 numeric failure or failed verification, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl::cli
