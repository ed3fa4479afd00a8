#pragma once

namespace sumsetlab::cli {

// Full command-line front end.  Returns the process exit code: 0 on success,
// 1 when a `check` assertion fails, 2 on usage errors, 3 on runtime errors
// (guards, I/O).
int run(int argc, const char* const* argv);

}  // namespace sumsetlab::cli
