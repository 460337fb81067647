#pragma once

namespace pm {

// Entry point of the command-line tool; returns the process exit code:
// 0 success, 1 usage or precondition error, 2 input/parse error,
// 3 degenerate measure, 4 statistical check failed.
int cli_main(int argc, const char* const* argv);

} // namespace pm
