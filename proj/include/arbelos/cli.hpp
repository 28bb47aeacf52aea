#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arbelos {

/// Entry point of the command line tool; args are argv[1..] in order.
///
/// Exit codes: 0 success; 1 usage, parameter or domain errors; 2 a verified
/// identity failed or an internal inconsistency was detected; 3 degenerate
/// geometry that admits no unique answer.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace arbelos
