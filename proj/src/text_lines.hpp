#pragma once

// Line/token scanner shared by the `p hg` and `p mg` readers.

#include <string>
#include <string_view>
#include <vector>

#include "hypchrom/parse_error.hpp"

namespace hypchrom::detail {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

/// Splits into whitespace-separated tokens, skipping blank lines and lines
/// whose first token is `c`.
std::vector<Line> scan_lines(std::string_view text);

/// Parses a non-negative decimal integer token, raising ParseError on failure.
unsigned long parse_unsigned(const Line& line, const Token& tok);

/// Reads the `p <kind> <n> <m>` header and returns (n, m); `lines` must be
/// non-empty.
std::pair<unsigned long, unsigned long> parse_header(const std::vector<Line>& lines, std::string_view kind);

}  // namespace hypchrom::detail
