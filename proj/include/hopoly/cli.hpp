#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hopoly/kpoly.hpp"

namespace hopoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitVerification = 3;

/// "1", "p/q" (both classes), "p/q,r/s" (short, long) or "symbolic" (nullopt).
std::optional<KValues> parse_k(std::string_view text);

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopoly::cli
