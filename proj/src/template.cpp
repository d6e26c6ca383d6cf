#include "tplint/template.hpp"

#include "tplint/error.hpp"
#include "tplint/text.hpp"

namespace tplint {

namespace {

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

// Matches IDENT at text[pos]; returns one-past-end or npos.
std::size_t match_ident(std::string_view text, std::size_t pos) {
    if (pos >= text.size() || !ident_start(text[pos])) return std::string_view::npos;
    std::size_t i = pos + 1;
    while (i < text.size() && ident_char(text[i])) ++i;
    return i;
}

} // namespace

const char* position_third_name(PositionThird p) {
    switch (p) {
    case PositionThird::Beginning: return "beginning";
    case PositionThird::Middle: return "middle";
    case PositionThird::End: return "end";
    }
    return "?";
}

PromptTemplate parse_template(std::string_view text, std::string id) {
    if (text::trim(text).empty()) throw Error("EmptyText", "template text is empty");
    if (!text::utf8_valid(text)) throw Error("MalformedUtf8", "template text is not valid UTF-8");

    PromptTemplate tpl;
    tpl.id = std::move(id);
    tpl.text.assign(text);
    tpl.char_length = text::utf8_length(text);

    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '{') {
            ++i;
            continue;
        }
        // longest match first: {{IDENT}}
        if (i + 1 < text.size() && text[i + 1] == '{') {
            const std::size_t id_end = match_ident(text, i + 2);
            if (id_end != std::string_view::npos && id_end + 1 < text.size() &&
                text[id_end] == '}' && text[id_end + 1] == '}') {
                Placeholder p;
                p.name.assign(text.substr(i + 2, id_end - (i + 2)));
                p.syntax = PlaceholderSyntax::DoubleBrace;
                p.span = {i, id_end + 2};
                p.ordinal = tpl.placeholders.size();
                tpl.placeholders.push_back(std::move(p));
                i = id_end + 2;
                continue;
            }
        }
        // {IDENT}
        const std::size_t id_end = match_ident(text, i + 1);
        if (id_end != std::string_view::npos && id_end < text.size() &&
            text[id_end] == '}') {
            Placeholder p;
            p.name.assign(text.substr(i + 1, id_end - (i + 1)));
            p.syntax = PlaceholderSyntax::SingleBrace;
            p.span = {i, id_end + 1};
            p.ordinal = tpl.placeholders.size();
            tpl.placeholders.push_back(std::move(p));
            i = id_end + 1;
            continue;
        }
        ++i; // stray brace stays static text
    }
    return tpl;
}

RenderResult render(const PromptTemplate& tpl,
                    const std::map<std::string, std::string>& bindings) {
    for (const auto& p : tpl.placeholders) {
        if (!bindings.contains(p.name))
            throw Error("MissingBinding", "no binding for placeholder '" + p.name + "'");
    }

    RenderResult result;
    result.text.reserve(tpl.text.size());
    std::size_t cursor = 0;
    for (const auto& p : tpl.placeholders) {
        result.text.append(tpl.text, cursor, p.span.begin - cursor);
        result.text.append(bindings.at(p.name));
        cursor = p.span.end;
    }
    result.text.append(tpl.text, cursor, tpl.text.size() - cursor);

    for (const auto& [name, value] : bindings) {
        (void)value;
        bool used = false;
        for (const auto& p : tpl.placeholders)
            if (p.name == name) { used = true; break; }
        if (!used) result.unused_bindings.push_back(name);
    }
    return result;
}

PositionThird placeholder_position(const PromptTemplate& tpl, const Placeholder& p) {
    bool found = false;
    for (const auto& own : tpl.placeholders) {
        if (own == p) { found = true; break; }
    }
    if (!found)
        throw Error("ForeignPlaceholder",
                    "placeholder '" + p.name + "' does not belong to template '" + tpl.id + "'");

    const double r = static_cast<double>(p.span.begin) /
                     static_cast<double>(tpl.byte_length());
    if (r < 1.0 / 3.0) return PositionThird::Beginning;
    if (r < 2.0 / 3.0) return PositionThird::Middle;
    return PositionThird::End;
}

std::size_t token_count(std::string_view s) { return text::token_count(s); }

bool is_template(std::string_view s) {
    if (text::trim(s).empty() || !text::utf8_valid(s)) return false;
    return !parse_template(s, "probe").placeholders.empty();
}

} // namespace tplint
