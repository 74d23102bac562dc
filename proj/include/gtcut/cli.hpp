#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gtcut {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRecordedErrors = 1;
inline constexpr int kExitUsage = 2;

// `gtcut` entry point: generate | exact | solve | train | bench.
// args[0] is the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace gtcut
