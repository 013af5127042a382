#pragma once

#include <ostream>

namespace stepfeat::cli {

/// Runs the command line. Data goes to `out` (or the --out file),
/// diagnostics to `err`. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stepfeat::cli
