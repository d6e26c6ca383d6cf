#pragma once

#include "tplint/sentences.hpp"
#include "tplint/template.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tplint {

// Merged component taxonomy. Others = no recognizable component.
enum class ComponentKind {
    ProfileRole,
    Directive,
    Workflow,
    Context,
    Examples,
    OutputFormatStyle,
    Constraints,
    Others,
};

inline constexpr ComponentKind kComponentKinds[] = {
    ComponentKind::ProfileRole,   ComponentKind::Directive,
    ComponentKind::Workflow,      ComponentKind::Context,
    ComponentKind::Examples,      ComponentKind::OutputFormatStyle,
    ComponentKind::Constraints,   ComponentKind::Others,
};

const char* kind_name(ComponentKind k); // display name, e.g. "Output Format/Style"
const char* kind_id(ComponentKind k);   // stable id, e.g. "output_format_style"
ComponentKind kind_from_id(std::string_view id); // throws Error{"UnknownKind"}

// A labeled region covering one or more consecutive sentences.
struct ComponentSpan {
    ComponentKind kind = ComponentKind::Others;
    ByteSpan span;
    std::size_t first_sentence = 0;
    std::size_t last_sentence = 0; // inclusive
};

struct SentenceLabel {
    Sentence sentence;
    ComponentKind kind = ComponentKind::Others;
    int cue_matches = 0; // how many kind lexicons fired; >1 flags ambiguity
};

// Cue lexicons for the rule-based sentence classifier. Leading cues match
// at the start of the (lowercased, trimmed) sentence; contains cues match
// anywhere. Priority when several kinds fire:
// Constraints > OutputFormatStyle > Workflow > Examples > ProfileRole >
// Context > Directive.
struct SegmenterRules {
    std::vector<std::string> profile_leading;
    std::vector<std::string> workflow_contains;
    std::vector<std::string> output_format_contains;
    std::vector<std::string> constraints_leading;
    std::vector<std::string> bound_phrases; // "<phrase> <number>" => Constraints
    std::vector<std::string> examples_contains;
    std::vector<std::string> context_contains;
    std::vector<std::string> directive_verbs;

    static SegmenterRules defaults();
};

std::vector<SentenceLabel> classify_sentences(const PromptTemplate& tpl,
                                              const SegmenterRules& rules);

// Labels every sentence, merges adjacent same-kind sentences into spans.
std::vector<ComponentSpan> segment(const PromptTemplate& tpl,
                                   const SegmenterRules& rules);

// Maps a free-form label onto the taxonomy by maximum similarity over
// canonical names and aliases; below `threshold` falls back to Others.
ComponentKind canonicalize_label(std::string_view raw, double threshold = 0.6);

// Kinds with at least one span; Others excluded.
std::set<ComponentKind> component_presence(const std::vector<ComponentSpan>& spans);

// Kinds by first occurrence, duplicates collapsed; Others excluded.
std::vector<ComponentKind> component_order(const std::vector<ComponentSpan>& spans);

struct GoldLabeling {
    std::string id;
    std::vector<std::pair<std::size_t, ComponentKind>> labels; // (sentence, kind)
};

struct MatchScores {
    double precision = 0.0;
    double p_full = 0.0;
    double p_partial = 0.0;
};

// Component-level precision plus template-level full/partial match rates.
// A predicted span counts as correct when the gold labels inside its
// sentence range exist and all agree with its kind. Throws
// Error{"IdMismatch"} and Error{"NoIdentified"}.
MatchScores score_against_gold(
    const std::map<std::string, std::vector<ComponentSpan>>& predicted,
    const std::map<std::string, GoldLabeling>& gold);

} // namespace tplint
