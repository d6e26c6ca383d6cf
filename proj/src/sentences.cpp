#include "tplint/sentences.hpp"

#include "tplint/text.hpp"

namespace tplint {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

// trimmed text starts with "<digits>." or "<digits>)"
bool starts_enumerated(std::string_view t) {
    std::size_t i = 0;
    while (i < t.size() && t[i] >= '0' && t[i] <= '9') ++i;
    if (i == 0 || i >= t.size()) return false;
    if (t[i] != '.' && t[i] != ')') return false;
    return i + 1 == t.size() || is_space(t[i + 1]);
}

bool starts_bulleted(std::string_view t) {
    if (t.size() < 2) return false;
    return (t[0] == '-' || t[0] == '*' || t[0] == '+') && is_space(t[1]);
}

// The run of non-space bytes ending just before `pos` is all digits.
bool enumerator_before(std::string_view line, std::size_t pos) {
    if (pos == 0) return false;
    std::size_t i = pos; // pos points at the '.'
    std::size_t start = i;
    while (start > 0 && !is_space(line[start - 1])) --start;
    if (start == i) return false;
    for (std::size_t k = start; k < i; ++k)
        if (line[k] < '0' || line[k] > '9') return false;
    return true;
}

void emit(std::vector<Sentence>& out, std::string_view full, std::size_t begin,
          std::size_t end, std::size_t line_index) {
    std::string_view raw = full.substr(begin, end - begin);
    std::string_view trimmed = tplint::text::trim(raw);
    if (trimmed.empty()) return;
    const std::size_t off = static_cast<std::size_t>(trimmed.data() - full.data());
    Sentence s;
    s.span = {off, off + trimmed.size()};
    s.line = line_index;
    s.enumerated = starts_enumerated(trimmed);
    s.bullet = starts_bulleted(trimmed);
    out.push_back(s);
}

} // namespace

std::vector<Sentence> split_sentences(std::string_view text) {
    std::vector<Sentence> sentences;
    std::size_t line_start = 0;
    std::size_t line_index = 0;

    auto process_line = [&](std::size_t lb, std::size_t le, std::size_t li) {
        std::string_view line = text.substr(lb, le - lb);
        std::size_t seg_start = 0;
        int brace_depth = 0;
        bool in_quotes = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char c = line[i];
            if (c == '"') in_quotes = !in_quotes;
            else if (c == '{' || c == '[') ++brace_depth;
            else if (c == '}' || c == ']') { if (brace_depth > 0) --brace_depth; }

            const bool terminator = (c == '.' || c == '!' || c == '?');
            if (terminator && !in_quotes && brace_depth == 0 &&
                i + 1 < line.size() && line[i + 1] == ' ') {
                if (c == '.' && enumerator_before(line, i)) continue;
                emit(sentences, text, lb + seg_start, lb + i + 1, li);
                seg_start = i + 2;
                i += 1;
            }
        }
        emit(sentences, text, lb + seg_start, le, li);
    };

    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            process_line(line_start, i, line_index);
            line_start = i + 1;
            ++line_index;
        }
    }
    return sentences;
}

} // namespace tplint
