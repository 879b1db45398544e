#pragma once

#include <string>
#include <string_view>

namespace grantha::utf8 {

/// Decodes UTF-8 into code points. Throws grantha::ArgumentError on
/// malformed input (overlong forms, surrogates and truncated sequences
/// included).
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view text);
std::string encode(char32_t cp);

/// "U+0D15" style rendering, upper-case hex, at least four digits.
std::string to_uplus(char32_t cp);
/// Space separated U+ notation of a whole string.
std::string to_uplus(std::u32string_view text);

/// Parses "U+XXXX" (case-insensitive prefix). Returns false if `token` is not
/// in that form or names a value outside the Unicode scalar range.
bool parse_uplus(std::string_view token, char32_t& out);

}  // namespace grantha::utf8
