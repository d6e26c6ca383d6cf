#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tplint {

// Half-open byte interval into a template's text.
struct ByteSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool operator==(const ByteSpan&) const = default;
};

enum class PlaceholderSyntax { SingleBrace, DoubleBrace };

// A named dynamic slot found in template text. The span covers the braces.
struct Placeholder {
    std::string name;
    PlaceholderSyntax syntax = PlaceholderSyntax::SingleBrace;
    ByteSpan span;
    std::size_t ordinal = 0; // 0-based occurrence index

    bool operator==(const Placeholder&) const = default;
};

struct RawPrompt {
    std::string id;
    std::string source;
    std::string text;
};

// Static text plus ordered, non-overlapping placeholders.
struct PromptTemplate {
    std::string id;
    std::string text;
    std::vector<Placeholder> placeholders;
    std::size_t char_length = 0; // Unicode scalar values

    std::size_t byte_length() const { return text.size(); }
};

enum class PositionThird { Beginning, Middle, End };

const char* position_third_name(PositionThird p);

// Placeholder grammar: "{{" IDENT "}}" or "{" IDENT "}", IDENT =
// [A-Za-z_][A-Za-z0-9_]*. Brace runs that fail the grammar (JSON literals,
// whitespace, quotes, nested braces) stay static text. Double-brace wins
// over single-brace at the same offset.
//
// Throws Error{"EmptyText"} and Error{"MalformedUtf8"}.
PromptTemplate parse_template(std::string_view text, std::string id);

struct RenderResult {
    std::string text;
    std::vector<std::string> unused_bindings; // reported, not fatal
};

// Substitutes every placeholder span with its binding; static text is left
// byte-identical. Throws Error{"MissingBinding"} naming the first absent name.
RenderResult render(const PromptTemplate& tpl,
                    const std::map<std::string, std::string>& bindings);

// Third of the template (by byte offset of the span start / byte length):
// [0,1/3) Beginning, [1/3,2/3) Middle, [2/3,1] End.
// Throws Error{"ForeignPlaceholder"} if p does not belong to tpl.
PositionThird placeholder_position(const PromptTemplate& tpl, const Placeholder& p);

// Unicode word tokens (see text::word_tokens); punctuation is not counted.
std::size_t token_count(std::string_view s);

// True iff parse_template would find at least one placeholder.
bool is_template(std::string_view s);

} // namespace tplint
