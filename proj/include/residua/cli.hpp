#pragma once

namespace residua::cli {

/// Entry point of the command-line tool; returns the process exit code
/// (0 success, 1 domain error, 2 usage error).
int run(int argc, const char* const* argv);

} // namespace residua::cli
