#pragma once

#include <iosfwd>

namespace qhl {

/// The `qhl` command line. JSON report on `out`, human log on `err`.
/// Exit codes: 0 pass, 1 a check failed, 2 usage, parse or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qhl
