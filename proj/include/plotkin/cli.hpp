#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plotkin {

/// Command-line entry point. Returns 0 on success, 1 on a usage error and
/// 2 on a data error (bad input file, failed construction, engine limit).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default worker count: PLOTKIN_THREADS when set to a positive integer, else 1.
unsigned default_threads();

}  // namespace plotkin
