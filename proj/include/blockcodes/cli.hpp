#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockcodes {

/// Entry point for the `blockcodes` tool. Subcommands: solve, gen,
/// enumerate, construct, verify. Returns 0 on success, 1 when a check fails
/// or the request has no answer (invalid code, inadmissible graph), 2 on
/// usage errors.
int cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace blockcodes
