#pragma once

#include "transdom/error.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace transdom::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpected = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitTooLarge = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitInvariant = 5;

int exit_code_for(ErrorCode code) noexcept;

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Runs one command line (args excludes the program name). The report or text
/// summary goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transdom::cli
