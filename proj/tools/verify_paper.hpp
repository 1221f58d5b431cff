#pragma once

#include <iosfwd>

/// Re-derives the reference constants of the built-in families and prints one
/// PASS/FAIL line per check.  Returns the number of failures.
int run_verify_paper(std::ostream& out);
