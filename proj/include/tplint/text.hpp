#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tplint::text {

// ---- UTF-8 ----------------------------------------------------------------

bool utf8_valid(std::string_view s);

// Number of Unicode scalar values. Input must be valid UTF-8.
std::size_t utf8_length(std::string_view s);

// Calls fn(codepoint, byte_offset, byte_len) for each scalar value.
// Returns false (and stops) on malformed input.
bool for_each_codepoint(std::string_view s,
                        const std::function<void(char32_t, std::size_t, std::size_t)>& fn);

// Canonical composition for the Latin repertoire (ASCII base + combining
// mark -> precomposed letter). Sequences outside the table pass through.
std::string nfc_latin(std::string_view s);

// ---- case / trimming -------------------------------------------------------

std::string to_lower(std::string_view s); // ASCII-only lowering
std::string_view trim(std::string_view s);
std::string collapse_whitespace(std::string_view s); // internal runs -> one space
bool starts_with(std::string_view s, std::string_view prefix);
bool contains_ci(std::string_view haystack, std::string_view needle);
bool starts_with_ci(std::string_view s, std::string_view prefix);

// ---- tokenization ----------------------------------------------------------

// Word tokens: maximal runs of letters/digits; an apostrophe between two
// letters joins a run ("don't" is one token); any non-ASCII scalar counts as
// a word character. Punctuation-only runs are not tokens.
std::vector<std::string> word_tokens(std::string_view s);
std::size_t token_count(std::string_view s);

// True when `needle` occurs as a whole word token (case-insensitive).
bool has_word_ci(std::string_view s, std::string_view needle);

// ---- lines / positions -----------------------------------------------------

struct LineCol {
    std::size_t line = 1; // 1-based
    std::size_t col = 1;  // 1-based, in bytes
};
LineCol line_col_at(std::string_view s, std::size_t byte_offset);

std::vector<std::string_view> split_lines(std::string_view s);

// ---- language heuristic ----------------------------------------------------

// True when at least `ascii_ratio` of letter-like characters are ASCII
// letters and the text contains no CJK scalar values.
bool looks_english(std::string_view s, double ascii_ratio);

// ---- misc ------------------------------------------------------------------

std::uint64_t fnv1a64(std::string_view s);
std::string fnv1a64_hex(std::string_view s);

// difflib-style similarity: 2*M / (|a|+|b|), M = total length of matching
// blocks found by recursive longest-common-substring.
double similarity_ratio(std::string_view a, std::string_view b);

} // namespace tplint::text
