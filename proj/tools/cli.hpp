#pragma once

namespace ramsey::cli {

// Full command-line entry point; returns the process exit code.
// 0 success/true, 1 legitimate negative, 2 usage error, 3 I/O error.
int run(int argc, const char* const* argv);

}  // namespace ramsey::cli
