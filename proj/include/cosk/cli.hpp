#pragma once

namespace cosk::cli {

// Full command-line entry point.  Returns the process exit code:
// 0 success / all checks passed, 1 verification failure, 2 usage or input
// error.
int run(int argc, const char* const* argv);

}  // namespace cosk::cli
