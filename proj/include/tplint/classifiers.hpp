#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tplint {

enum class DirectiveStyle { Instruction, Question };

enum class PlaceholderType {
    UserQuestion,
    ContextualInformation,
    KnowledgeInput,
    MetadataShortPhrase,
    Other,
};

enum class ConstraintType { Exclusion, Inclusion, WordCount, Other };

enum class JsonFormatPattern {
    NotJson,
    P1_JsonOutput,              // JSON declared, no attribute names
    P2_PlusAttributeNames,      // + explicit attribute names
    P3_PlusAttributeDescriptions, // + per-attribute descriptions
};

const char* directive_style_name(DirectiveStyle s);
const char* placeholder_type_name(PlaceholderType t);
const char* constraint_type_name(ConstraintType t);
const char* json_pattern_name(JsonFormatPattern p);

struct ClassifierRules {
    std::vector<std::string> question_words;
    std::vector<std::string> user_question_names;
    std::vector<std::string> contextual_names;
    std::vector<std::string> knowledge_names;
    std::vector<std::string> metadata_names;
    std::vector<std::string> exclusion_cues;   // substring cues
    std::vector<std::string> inclusion_cues;   // substring cues
    std::vector<std::string> bound_phrases;    // "<phrase> <number>" => WordCount
    double described_fraction = 0.5;           // share of keys needing prose for P3
    std::size_t description_min_words = 3;     // quoted value counts as prose at this size

    static ClassifierRules defaults();
};

// Question iff the first token is a question word or the text ends with '?'.
DirectiveStyle classify_directive_style(std::string_view directive_text,
                                        const ClassifierRules& rules);

// Name-keyword map first, then cues from the text surrounding the slot.
PlaceholderType classify_placeholder(std::string_view name,
                                     std::string_view context_window,
                                     const ClassifierRules& rules);

// Exclusion beats WordCount beats Inclusion.
ConstraintType classify_constraint(std::string_view sentence,
                                   const ClassifierRules& rules);

// Attribute names found while detecting the JSON output pattern.
struct JsonPatternEvidence {
    JsonFormatPattern pattern = JsonFormatPattern::NotJson;
    std::vector<std::string> keys;
    std::vector<std::string> described_keys;
};

JsonPatternEvidence detect_json_pattern(std::string_view output_format_text,
                                        const ClassifierRules& rules);

} // namespace tplint
