#pragma once

#include "nkirby/diagram.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nkirby {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on domain errors and 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `key=value` lines describing the invariants of `d`; byte-stable.
std::string invariant_records(const Diagram& d);

}  // namespace nkirby
