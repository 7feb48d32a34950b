#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace stump::utf8 {

// Decodes UTF-8 into code points. In strict mode malformed sequences throw
// ParseError; otherwise each offending byte becomes U+FFFD.
std::u32string decode(std::string_view text, bool strict);

std::string encode(std::u32string_view points);

bool is_valid(std::string_view text);

// Character classes used by the normalization pipeline. These are curated
// tables for the scripts that actually occur in the corpus (Latin, major
// Indic scripts, Cyrillic, Greek, Arabic, CJK, ...), not a full Unicode
// property database.
bool is_space(char32_t cp);
bool is_ascii_digit(char32_t cp);
bool is_letter(char32_t cp);

// Simple one-to-one lowercase mapping (ASCII, Latin-1/Ext-A, Greek,
// Cyrillic, fullwidth Latin). Code points without a mapping pass through.
char32_t to_lower(char32_t cp);

}  // namespace stump::utf8
