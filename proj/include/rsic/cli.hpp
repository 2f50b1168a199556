#pragma once

#include <iosfwd>

namespace rsic {

/// Entry point of the `rsic` tool: gen, run, opt, verify, ratio.
/// Returns the process exit code; 0 iff every requested check passed.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rsic
