#pragma once

#include <ostream>

namespace spinring::cli {

/// Runs the fast invariant checks and prints one line per check.
/// Returns the number of failed checks.
int run_verify(std::ostream& out);

}  // namespace spinring::cli
