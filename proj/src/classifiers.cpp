#include "tplint/classifiers.hpp"

#include "tplint/text.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

namespace tplint {

const char* directive_style_name(DirectiveStyle s) {
    return s == DirectiveStyle::Instruction ? "instruction" : "question";
}

const char* placeholder_type_name(PlaceholderType t) {
    switch (t) {
    case PlaceholderType::UserQuestion: return "user_question";
    case PlaceholderType::ContextualInformation: return "contextual_information";
    case PlaceholderType::KnowledgeInput: return "knowledge_input";
    case PlaceholderType::MetadataShortPhrase: return "metadata_short_phrase";
    case PlaceholderType::Other: return "other";
    }
    return "?";
}

const char* constraint_type_name(ConstraintType t) {
    switch (t) {
    case ConstraintType::Exclusion: return "exclusion";
    case ConstraintType::Inclusion: return "inclusion";
    case ConstraintType::WordCount: return "word_count";
    case ConstraintType::Other: return "other";
    }
    return "?";
}

const char* json_pattern_name(JsonFormatPattern p) {
    switch (p) {
    case JsonFormatPattern::NotJson: return "not_json";
    case JsonFormatPattern::P1_JsonOutput: return "pattern1_json_output";
    case JsonFormatPattern::P2_PlusAttributeNames: return "pattern2_attribute_names";
    case JsonFormatPattern::P3_PlusAttributeDescriptions: return "pattern3_attribute_descriptions";
    }
    return "?";
}

ClassifierRules ClassifierRules::defaults() {
    ClassifierRules r;
    r.question_words = {
        "how",   "what",  "why",   "when", "where", "which", "who",
        "can",   "could", "would", "should", "do",  "does",  "is", "are",
    };
    r.user_question_names = {"question", "query", "q", "ask"};
    r.contextual_names = {"history",     "background", "context",
                          "conversation", "memory",    "info"};
    r.knowledge_names = {"document", "text",    "code",    "report",
                         "content",  "input",   "article", "passage",
                         "snippet",  "transcript", "essay", "body", "data"};
    r.metadata_names = {"language", "username", "format", "name",   "date",
                        "style",    "topic",    "count",  "user",   "title",
                        "author",   "category", "type",   "number", "num",
                        "id",       "key",      "label",  "lang",   "tone",
                        "audience", "genre",    "subject", "domain", "year",
                        "time",     "version",  "limit"};
    r.exclusion_cues = {"do not",   "don't",      "avoid",     "never",
                        "no other", "exclude",    "not include",
                        "without any", "refrain from", "must not", "should not"};
    r.inclusion_cues = {"include",    "must contain", "focus on",
                        "ensure",     "make sure",    "should contain",
                        "incorporate", "mention"};
    r.bound_phrases = {"at most",      "at least",   "no more than",
                       "fewer than",   "less than",  "within",
                       "under",        "up to",      "a maximum of",
                       "maximum of",   "a minimum of"};
    return r;
}

DirectiveStyle classify_directive_style(std::string_view directive_text,
                                        const ClassifierRules& rules) {
    const std::string_view trimmed = text::trim(directive_text);
    if (!trimmed.empty() && trimmed.back() == '?') return DirectiveStyle::Question;

    const auto tokens = text::word_tokens(trimmed);
    if (tokens.empty()) return DirectiveStyle::Instruction;
    const std::string first = text::to_lower(tokens.front());
    const bool question_word =
        std::find(rules.question_words.begin(), rules.question_words.end(), first) !=
        rules.question_words.end();
    return question_word ? DirectiveStyle::Question : DirectiveStyle::Instruction;
}

namespace {

// split on '_', '-', digits<->letters and camelCase humps
std::vector<std::string> name_parts(std::string_view name) {
    std::vector<std::string> parts;
    std::string current;
    char prev = 0;
    for (char c : name) {
        const bool sep = c == '_' || c == '-' || c == ' ' || c == '.';
        const bool hump = std::isupper(static_cast<unsigned char>(c)) &&
                          std::islower(static_cast<unsigned char>(prev));
        if (sep || hump) {
            if (!current.empty()) parts.push_back(text::to_lower(current));
            current.clear();
            if (sep) { prev = c; continue; }
        }
        current += c;
        prev = c;
    }
    if (!current.empty()) parts.push_back(text::to_lower(current));
    return parts;
}

bool any_part_in(const std::vector<std::string>& parts,
                 const std::vector<std::string>& names) {
    for (const auto& p : parts)
        if (std::find(names.begin(), names.end(), p) != names.end()) return true;
    return false;
}

} // namespace

PlaceholderType classify_placeholder(std::string_view name,
                                     std::string_view context_window,
                                     const ClassifierRules& rules) {
    const auto parts = name_parts(name);
    if (any_part_in(parts, rules.user_question_names))
        return PlaceholderType::UserQuestion;
    if (any_part_in(parts, rules.contextual_names))
        return PlaceholderType::ContextualInformation;
    if (any_part_in(parts, rules.knowledge_names))
        return PlaceholderType::KnowledgeInput;
    if (any_part_in(parts, rules.metadata_names))
        return PlaceholderType::MetadataShortPhrase;

    if (text::contains_ci(context_window, "answer the"))
        return PlaceholderType::UserQuestion;
    if (text::contains_ci(context_window, "based on the following") ||
        text::contains_ci(context_window, "following document") ||
        text::contains_ci(context_window, "following text"))
        return PlaceholderType::KnowledgeInput;
    return PlaceholderType::Other;
}

namespace {

bool phrase_then_number(std::string_view lowered,
                        const std::vector<std::string>& phrases) {
    for (const auto& phrase : phrases) {
        std::size_t pos = 0;
        while ((pos = lowered.find(phrase, pos)) != std::string_view::npos) {
            const std::size_t i = pos + phrase.size();
            if (i + 1 < lowered.size() && lowered[i] == ' ' &&
                lowered[i + 1] >= '0' && lowered[i + 1] <= '9')
                return true;
            ++pos;
        }
    }
    return false;
}

bool number_then_unit(std::string_view lowered) {
    static const std::regex re(
        R"(\b[0-9]+ (words?|sentences?|tokens?|characters?|paragraphs?|lines?|items?|bullet points?)\b)");
    return std::regex_search(lowered.begin(), lowered.end(), re);
}

} // namespace

ConstraintType classify_constraint(std::string_view sentence,
                                   const ClassifierRules& rules) {
    const std::string lowered = text::to_lower(sentence);
    for (const auto& cue : rules.exclusion_cues)
        if (lowered.find(cue) != std::string::npos) return ConstraintType::Exclusion;
    if (phrase_then_number(lowered, rules.bound_phrases) || number_then_unit(lowered))
        return ConstraintType::WordCount;
    for (const auto& cue : rules.inclusion_cues)
        if (lowered.find(cue) != std::string::npos) return ConstraintType::Inclusion;
    return ConstraintType::Other;
}

namespace {

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

bool is_identifier(std::string_view s) {
    if (s.empty() || !ident_start(s[0])) return false;
    return std::all_of(s.begin() + 1, s.end(), ident_char);
}

struct QuotedKey {
    std::string name;
    std::size_t end;       // offset just past the closing quote
    bool has_colon = false;
};

// All `"ident"` / `'ident'` occurrences, noting whether ':' follows.
std::vector<QuotedKey> quoted_identifiers(std::string_view text) {
    std::vector<QuotedKey> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char q = text[i];
        if (q != '"' && q != '\'') continue;
        const std::size_t close = text.find(q, i + 1);
        if (close == std::string_view::npos) continue;
        const std::string_view inner = text.substr(i + 1, close - i - 1);
        if (!is_identifier(inner)) continue;
        QuotedKey k;
        k.name.assign(inner);
        k.end = close + 1;
        std::size_t j = close + 1;
        while (j < text.size() && (text[j] == ' ' || text[j] == '\t')) ++j;
        k.has_colon = j < text.size() && text[j] == ':';
        out.push_back(std::move(k));
        i = close;
    }
    return out;
}

// Content following "key": up to the next top-level ',' / '}' / line end.
std::string_view value_slot_after(std::string_view text, std::size_t colon_pos) {
    std::size_t i = colon_pos + 1;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i >= text.size()) return {};
    const std::size_t start = i;
    if (text[i] == '"' || text[i] == '\'') {
        const char q = text[i];
        const std::size_t close = text.find(q, i + 1);
        if (close == std::string_view::npos) return text.substr(start);
        return text.substr(start, close + 1 - start);
    }
    int depth = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '{' || c == '[') ++depth;
        else if (c == '}' || c == ']') {
            if (depth == 0) break;
            --depth;
        } else if ((c == ',' || c == '\n') && depth == 0) {
            break;
        }
        ++i;
    }
    return text.substr(start, i - start);
}

bool is_json_scalar(std::string_view v) {
    const std::string_view t = text::trim(v);
    if (t.empty()) return true;
    if (t == "true" || t == "false" || t == "null") return true;
    bool digits = true;
    for (char c : t)
        if (!((c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' ||
              c == 'e' || c == 'E'))
            digits = false;
    return digits;
}

} // namespace

JsonPatternEvidence detect_json_pattern(std::string_view output_format_text,
                                        const ClassifierRules& rules) {
    JsonPatternEvidence ev;
    const std::string lowered = text::to_lower(output_format_text);
    const bool declared = text::has_word_ci(output_format_text, "json") ||
                          lowered.find("```json") != std::string::npos;
    if (!declared) return ev;

    std::vector<std::string> keys;
    std::set<std::string> described;
    auto add_key = [&](const std::string& name) {
        if (std::find(keys.begin(), keys.end(), name) == keys.end())
            keys.push_back(name);
    };

    // quoted "key": value-or-description
    const auto quoted = quoted_identifiers(output_format_text);
    for (const auto& k : quoted) {
        if (!k.has_colon) continue;
        add_key(k.name);
        std::size_t colon = k.end;
        while (colon < output_format_text.size() && output_format_text[colon] != ':')
            ++colon;
        std::string_view slot = value_slot_after(output_format_text, colon);
        std::string_view content = text::trim(slot);
        if (!content.empty() && (content.front() == '"' || content.front() == '\'')) {
            content = text::trim(content.substr(1, content.size() >= 2 ? content.size() - 2 : 0));
        } else if (!content.empty() && (content.front() == '{' || content.front() == '[')) {
            continue; // nested structure is a value slot, not a description
        }
        if (is_json_scalar(content)) continue;
        if (text::token_count(content) >= rules.description_min_words)
            described.insert(k.name);
    }

    // enumerated quoted names without colons ("keys \"a\", \"b\"")
    std::size_t plain_quoted = 0;
    for (const auto& k : quoted)
        if (!k.has_colon) ++plain_quoted;
    const bool key_keyword = lowered.find("key") != std::string::npos ||
                             lowered.find("field") != std::string::npos ||
                             lowered.find("attribute") != std::string::npos ||
                             lowered.find("propert") != std::string::npos;
    if (key_keyword || plain_quoted >= 2) {
        for (const auto& k : quoted)
            if (!k.has_colon) add_key(k.name);
    }

    // bulleted "- key: prose" lines (bare identifiers)
    for (std::string_view line : text::split_lines(output_format_text)) {
        std::string_view t = text::trim(line);
        bool bullet = false;
        if (t.size() >= 2 && (t[0] == '-' || t[0] == '*' || t[0] == '+') && t[1] == ' ') {
            bullet = true;
            t = text::trim(t.substr(2));
        }
        const std::size_t colon = t.find(':');
        if (colon == std::string_view::npos || colon == 0) continue;
        const std::string_view ident = text::trim(t.substr(0, colon));
        if (!is_identifier(ident)) continue;
        const bool known =
            std::find(keys.begin(), keys.end(), std::string(ident)) != keys.end();
        const bool snake = ident.find('_') != std::string_view::npos;
        if (!bullet && !snake && !known) continue;
        const std::string_view prose = text::trim(t.substr(colon + 1));
        if (text::token_count(prose) >= rules.description_min_words) {
            add_key(std::string(ident));
            described.insert(std::string(ident));
        }
    }

    ev.keys = keys;
    ev.described_keys.assign(described.begin(), described.end());
    if (keys.empty()) {
        ev.pattern = JsonFormatPattern::P1_JsonOutput;
    } else if (static_cast<double>(described.size()) >=
               rules.described_fraction * static_cast<double>(keys.size())) {
        ev.pattern = JsonFormatPattern::P3_PlusAttributeDescriptions;
    } else {
        ev.pattern = JsonFormatPattern::P2_PlusAttributeNames;
    }
    return ev;
}

} // namespace tplint
