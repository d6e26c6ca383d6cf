#include "tplint/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace tplint::text {

namespace {

bool is_ascii_alpha(char32_t c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_digit(char32_t c) { return c >= '0' && c <= '9'; }

bool is_cjk(char32_t c) {
    return (c >= 0x3040 && c <= 0x30FF)   // kana
        || (c >= 0x3400 && c <= 0x4DBF)   // CJK ext A
        || (c >= 0x4E00 && c <= 0x9FFF)   // CJK unified
        || (c >= 0xAC00 && c <= 0xD7AF)   // hangul
        || (c >= 0xF900 && c <= 0xFAFF);  // CJK compat
}

// Decodes one scalar value at s[i]; returns length or 0 on malformed input.
std::size_t decode_one(std::string_view s, std::size_t i, char32_t& out) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    auto cont = [&](std::size_t k) {
        return i + k < s.size() &&
               (static_cast<unsigned char>(s[i + k]) & 0xC0u) == 0x80u;
    };
    if (b0 < 0x80) {
        out = b0;
        return 1;
    }
    if ((b0 & 0xE0u) == 0xC0u) {
        if (!cont(1) || b0 < 0xC2) return 0; // overlong
        out = ((b0 & 0x1Fu) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
        return 2;
    }
    if ((b0 & 0xF0u) == 0xE0u) {
        if (!cont(1) || !cont(2)) return 0;
        out = ((b0 & 0x0Fu) << 12) |
              ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6) |
              (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
        if (out < 0x800) return 0;                    // overlong
        if (out >= 0xD800 && out <= 0xDFFF) return 0; // surrogate
        return 3;
    }
    if ((b0 & 0xF8u) == 0xF0u) {
        if (!cont(1) || !cont(2) || !cont(3)) return 0;
        out = ((b0 & 0x07u) << 18) |
              ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12) |
              ((static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6) |
              (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
        if (out < 0x10000 || out > 0x10FFFF) return 0;
        return 4;
    }
    return 0;
}

} // namespace

bool utf8_valid(std::string_view s) {
    std::size_t i = 0;
    char32_t cp;
    while (i < s.size()) {
        const std::size_t n = decode_one(s, i, cp);
        if (n == 0) return false;
        i += n;
    }
    return true;
}

std::size_t utf8_length(std::string_view s) {
    std::size_t count = 0;
    for (char c : s)
        if ((static_cast<unsigned char>(c) & 0xC0u) != 0x80u) ++count;
    return count;
}

bool for_each_codepoint(std::string_view s,
                        const std::function<void(char32_t, std::size_t, std::size_t)>& fn) {
    std::size_t i = 0;
    char32_t cp;
    while (i < s.size()) {
        const std::size_t n = decode_one(s, i, cp);
        if (n == 0) return false;
        fn(cp, i, n);
        i += n;
    }
    return true;
}

namespace {

std::string encode_utf8(char32_t c) {
    std::string out;
    if (c < 0x80) {
        out += static_cast<char>(c);
    } else if (c < 0x800) {
        out += static_cast<char>(0xC0 | (c >> 6));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
        out += static_cast<char>(0xE0 | (c >> 12));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (c >> 18));
        out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    }
    return out;
}

// base letter + combining mark -> precomposed form, Latin repertoire only.
const std::map<std::pair<char32_t, char32_t>, char32_t>& composition_table() {
    static const std::map<std::pair<char32_t, char32_t>, char32_t> table = {
        // U+0300 grave
        {{U'a', 0x300}, 0xE0}, {{U'e', 0x300}, 0xE8}, {{U'i', 0x300}, 0xEC},
        {{U'o', 0x300}, 0xF2}, {{U'u', 0x300}, 0xF9},
        {{U'A', 0x300}, 0xC0}, {{U'E', 0x300}, 0xC8}, {{U'I', 0x300}, 0xCC},
        {{U'O', 0x300}, 0xD2}, {{U'U', 0x300}, 0xD9},
        // U+0301 acute
        {{U'a', 0x301}, 0xE1}, {{U'e', 0x301}, 0xE9}, {{U'i', 0x301}, 0xED},
        {{U'o', 0x301}, 0xF3}, {{U'u', 0x301}, 0xFA}, {{U'y', 0x301}, 0xFD},
        {{U'c', 0x301}, 0x107}, {{U'n', 0x301}, 0x144}, {{U's', 0x301}, 0x15B},
        {{U'z', 0x301}, 0x17A},
        {{U'A', 0x301}, 0xC1}, {{U'E', 0x301}, 0xC9}, {{U'I', 0x301}, 0xCD},
        {{U'O', 0x301}, 0xD3}, {{U'U', 0x301}, 0xDA}, {{U'Y', 0x301}, 0xDD},
        {{U'C', 0x301}, 0x106}, {{U'N', 0x301}, 0x143}, {{U'S', 0x301}, 0x15A},
        {{U'Z', 0x301}, 0x179},
        // U+0302 circumflex
        {{U'a', 0x302}, 0xE2}, {{U'e', 0x302}, 0xEA}, {{U'i', 0x302}, 0xEE},
        {{U'o', 0x302}, 0xF4}, {{U'u', 0x302}, 0xFB},
        {{U'A', 0x302}, 0xC2}, {{U'E', 0x302}, 0xCA}, {{U'I', 0x302}, 0xCE},
        {{U'O', 0x302}, 0xD4}, {{U'U', 0x302}, 0xDB},
        // U+0303 tilde
        {{U'a', 0x303}, 0xE3}, {{U'n', 0x303}, 0xF1}, {{U'o', 0x303}, 0xF5},
        {{U'A', 0x303}, 0xC3}, {{U'N', 0x303}, 0xD1}, {{U'O', 0x303}, 0xD5},
        // U+0308 diaeresis
        {{U'a', 0x308}, 0xE4}, {{U'e', 0x308}, 0xEB}, {{U'i', 0x308}, 0xEF},
        {{U'o', 0x308}, 0xF6}, {{U'u', 0x308}, 0xFC}, {{U'y', 0x308}, 0xFF},
        {{U'A', 0x308}, 0xC4}, {{U'E', 0x308}, 0xCB}, {{U'I', 0x308}, 0xCF},
        {{U'O', 0x308}, 0xD6}, {{U'U', 0x308}, 0xDC}, {{U'Y', 0x308}, 0x178},
        // U+030A ring above
        {{U'a', 0x30A}, 0xE5}, {{U'A', 0x30A}, 0xC5},
        // U+030C caron
        {{U'c', 0x30C}, 0x10D}, {{U's', 0x30C}, 0x161}, {{U'z', 0x30C}, 0x17E},
        {{U'C', 0x30C}, 0x10C}, {{U'S', 0x30C}, 0x160}, {{U'Z', 0x30C}, 0x17D},
        // U+0327 cedilla
        {{U'c', 0x327}, 0xE7}, {{U'C', 0x327}, 0xC7},
    };
    return table;
}

} // namespace

std::string nfc_latin(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool have_prev = false;
    char32_t prev = 0;
    for_each_codepoint(s, [&](char32_t cp, std::size_t, std::size_t) {
        if (have_prev) {
            auto it = composition_table().find({prev, cp});
            if (it != composition_table().end()) {
                prev = it->second;
                return;
            }
            out += encode_utf8(prev);
        }
        prev = cp;
        have_prev = true;
    });
    if (have_prev) out += encode_utf8(prev);
    return out;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_ws = false;
    for (char c : trim(s)) {
        const bool ws = c == ' ' || c == '\t' || c == '\r' || c == '\n' ||
                        c == '\f' || c == '\v';
        if (ws) {
            in_ws = true;
        } else {
            if (in_ws) out += ' ';
            in_ws = false;
            out += c;
        }
    }
    return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[i])) !=
            std::tolower(static_cast<unsigned char>(prefix[i])))
            return false;
    }
    return true;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    if (haystack.size() < needle.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        if (starts_with_ci(haystack.substr(i), needle)) return true;
    }
    return false;
}

namespace {

bool is_word_char(char32_t c) {
    return is_ascii_alpha(c) || is_ascii_digit(c) || c >= 0x80;
}

} // namespace

std::vector<std::string> word_tokens(std::string_view s) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    char32_t cp;
    char32_t prev_cp = 0;
    while (i < s.size()) {
        std::size_t n = decode_one(s, i, cp);
        if (n == 0) { // skip malformed byte rather than abort
            prev_cp = 0;
            ++i;
            continue;
        }
        if (is_word_char(cp)) {
            current.append(s.substr(i, n));
        } else if (cp == U'\'' && !current.empty() && is_ascii_alpha(prev_cp) &&
                   i + n < s.size()) {
            // apostrophe joins only when flanked by letters
            char32_t next;
            std::size_t m = decode_one(s, i + n, next);
            if (m != 0 && is_ascii_alpha(next)) {
                current += '\'';
            } else if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
        prev_cp = cp;
        i += n;
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::size_t token_count(std::string_view s) { return word_tokens(s).size(); }

bool has_word_ci(std::string_view s, std::string_view needle) {
    const std::string target = to_lower(needle);
    for (const auto& tok : word_tokens(s)) {
        if (to_lower(tok) == target) return true;
    }
    return false;
}

LineCol line_col_at(std::string_view s, std::size_t byte_offset) {
    LineCol lc;
    const std::size_t limit = std::min(byte_offset, s.size());
    for (std::size_t i = 0; i < limit; ++i) {
        if (s[i] == '\n') {
            ++lc.line;
            lc.col = 1;
        } else {
            ++lc.col;
        }
    }
    return lc;
}

std::vector<std::string_view> split_lines(std::string_view s) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '\n') {
            std::string_view line = s.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            lines.push_back(line);
            start = i + 1;
        }
    }
    return lines;
}

bool looks_english(std::string_view s, double ascii_ratio) {
    std::size_t ascii_letters = 0;
    std::size_t other_letters = 0;
    bool cjk = false;
    for_each_codepoint(s, [&](char32_t cp, std::size_t, std::size_t) {
        if (is_cjk(cp)) cjk = true;
        if (is_ascii_alpha(cp)) {
            ++ascii_letters;
        } else if (cp >= 0x80) {
            // General Punctuation and Latin-1 punctuation are not letters.
            const bool punctish = (cp >= 0x2000 && cp <= 0x206F) ||
                                  (cp >= 0xA0 && cp <= 0xBF);
            if (!punctish) ++other_letters;
        }
    });
    if (cjk) return false;
    const std::size_t total = ascii_letters + other_letters;
    if (total == 0) return false; // no letters at all: not an English prompt
    return static_cast<double>(ascii_letters) / static_cast<double>(total) >=
           ascii_ratio;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view s) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(s);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

namespace {

// Longest matching block between a[alo,ahi) and b[blo,bhi).
struct Match {
    std::size_t a = 0, b = 0, size = 0;
};

Match longest_match(std::string_view a, std::string_view b, std::size_t alo,
                    std::size_t ahi, std::size_t blo, std::size_t bhi) {
    Match best{alo, blo, 0};
    // j2len[j]: length of longest match ending at a[i-1], b[j-1]
    std::vector<std::size_t> j2len(b.size() + 1, 0);
    for (std::size_t i = alo; i < ahi; ++i) {
        std::vector<std::size_t> next(b.size() + 1, 0);
        for (std::size_t j = blo; j < bhi; ++j) {
            if (a[i] == b[j]) {
                const std::size_t k = j2len[j] + 1;
                next[j + 1] = k;
                if (k > best.size) {
                    best = {i + 1 - k, j + 1 - k, k};
                }
            }
        }
        j2len = std::move(next);
    }
    return best;
}

std::size_t matching_total(std::string_view a, std::string_view b,
                           std::size_t alo, std::size_t ahi, std::size_t blo,
                           std::size_t bhi) {
    if (alo >= ahi || blo >= bhi) return 0;
    const Match m = longest_match(a, b, alo, ahi, blo, bhi);
    if (m.size == 0) return 0;
    return m.size + matching_total(a, b, alo, m.a, blo, m.b) +
           matching_total(a, b, m.a + m.size, ahi, m.b + m.size, bhi);
}

} // namespace

double similarity_ratio(std::string_view a, std::string_view b) {
    if (a.empty() && b.empty()) return 1.0;
    const std::size_t m = matching_total(a, b, 0, a.size(), 0, b.size());
    return 2.0 * static_cast<double>(m) /
           static_cast<double>(a.size() + b.size());
}

} // namespace tplint::text
