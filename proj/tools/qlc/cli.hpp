#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace qlc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs one subcommand. args[0] is the program name. Results go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 on usage errors, 2 on data or
// model errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qlc::cli
