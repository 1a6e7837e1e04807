#pragma once

namespace dualdec {

// Command-line front end; returns the process exit code (0 success, 1 usage
// error, 2 runtime failure).
int cli_main(int argc, const char* const* argv);

} // namespace dualdec
