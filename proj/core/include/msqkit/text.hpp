#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace msqkit {

// Replaces the Unicode single quotes U+2018/U+2019 with the ASCII
// apostrophe. All marker lists and tokens are stored in this form.
std::string normalize_apostrophes(std::string_view text);

// ASCII-only lowercasing; bytes outside A-Z pass through.
std::string to_lower(std::string_view text);

std::string_view trim(std::string_view text);

// Collapses every whitespace run to a single space and trims the ends.
std::string collapse_whitespace(std::string_view text);

// True when the text, ignoring trailing whitespace, ends in '?'.
bool ends_with_question_mark(std::string_view text);

// Number of UTF-8 code points (falls back to byte count on invalid bytes).
std::size_t codepoint_count(std::string_view text);

// Lowercased maximal runs of letters, digits and apostrophes; everything
// else separates. Curly apostrophes are normalized first. Code points in
// [0x80, 0x2000) count as letters so accented words stay whole, while
// general punctuation (curly quotes, dashes, ...) separates.
std::vector<std::string> tokenize(std::string_view text);

// Tokens joined with single spaces; the canonical string form of a match.
std::string join_tokens(const std::vector<std::string>& tokens,
                        std::size_t start, std::size_t length);

}  // namespace msqkit
