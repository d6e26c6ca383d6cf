#include "tplint/segmenter.hpp"

#include "tplint/error.hpp"
#include "tplint/text.hpp"

#include <algorithm>
#include <array>
#include <regex>

namespace tplint {

const char* kind_name(ComponentKind k) {
    switch (k) {
    case ComponentKind::ProfileRole: return "Profile/Role";
    case ComponentKind::Directive: return "Directive";
    case ComponentKind::Workflow: return "Workflow";
    case ComponentKind::Context: return "Context";
    case ComponentKind::Examples: return "Examples";
    case ComponentKind::OutputFormatStyle: return "Output Format/Style";
    case ComponentKind::Constraints: return "Constraints";
    case ComponentKind::Others: return "Others";
    }
    return "?";
}

const char* kind_id(ComponentKind k) {
    switch (k) {
    case ComponentKind::ProfileRole: return "profile_role";
    case ComponentKind::Directive: return "directive";
    case ComponentKind::Workflow: return "workflow";
    case ComponentKind::Context: return "context";
    case ComponentKind::Examples: return "examples";
    case ComponentKind::OutputFormatStyle: return "output_format_style";
    case ComponentKind::Constraints: return "constraints";
    case ComponentKind::Others: return "others";
    }
    return "?";
}

ComponentKind kind_from_id(std::string_view id) {
    for (ComponentKind k : kComponentKinds)
        if (id == kind_id(k)) return k;
    throw Error("UnknownKind", "no component kind with id '" + std::string(id) + "'");
}

SegmenterRules SegmenterRules::defaults() {
    SegmenterRules r;
    r.profile_leading = {
        "you are a ",  "you are an ", "you are the ", "you're a ",
        "you're an ",  "act as ",     "acting as ",   "i want you to act",
        "your task is", "your job is", "your role is",
    };
    r.workflow_contains = {
        "follow these steps", "follow the steps", "follow this process",
        "step-by-step",       "step by step",     "steps:",
    };
    r.output_format_contains = {
        "in the following format", "following format",  "structured format",
        "respond in",              "respond with",      "respond only with",
        "reply in",                "reply with",        "output json",
        "in json",                 "as json",           "as a json",
        "json format",             "json object",       "json schema",
        "json array",              "valid json",        "output format",
        "markdown format",         "markdown table",    "bullet points",
        "format:",                 "format your response",
    };
    r.constraints_leading = {
        "do not ",   "don't ",        "avoid ",          "never ",
        "only ",     "must not ",     "you must not",    "you should not",
        "please do not", "please don't", "refrain from", "exclude ",
        "under no circumstances",     "ensure ",         "make sure ",
        "keep ",     "limit ",
    };
    r.bound_phrases = {
        "at most",      "at least",   "no more than", "fewer than",
        "less than",    "within",     "under",        "up to",
        "a maximum of", "maximum of", "a minimum of",
    };
    r.examples_contains = {
        "for example",     "for instance",     "e.g.",
        "example:",        "examples:",        "example output",
        "sample output",   "example response", "example topics",
        "here are some examples", "few-shot",  "following examples",
    };
    r.context_contains = {
        "you are given",    "you will be given", "context:",
        "background:",      "the following information",
        "given the following", "based on the following",
        "here is the",      "use the following",
    };
    r.directive_verbs = {
        "answer",   "analyze",  "analyse",   "assess",    "check",
        "choose",   "classify", "compare",   "compose",   "convert",
        "correct",  "create",   "describe",  "design",    "determine",
        "develop",  "draft",    "edit",      "evaluate",  "explain",
        "extract",  "find",     "fix",       "generate",  "give",
        "identify", "improve",  "label",     "list",      "outline",
        "paraphrase", "predict", "produce",  "propose",   "provide",
        "rank",     "recommend", "return",   "review",    "rewrite",
        "select",   "simplify", "solve",     "sort",      "suggest",
        "summarize", "summarise", "tell",    "translate", "write",
    };
    return r;
}

namespace {

bool any_leading(std::string_view lowered, const std::vector<std::string>& cues) {
    for (const auto& cue : cues)
        if (text::starts_with(lowered, cue)) return true;
    return false;
}

bool any_contains(std::string_view lowered, const std::vector<std::string>& cues) {
    for (const auto& cue : cues)
        if (lowered.find(cue) != std::string_view::npos) return true;
    return false;
}

// "<phrase> <number>" anywhere in the sentence
bool has_numeric_bound(std::string_view lowered, const std::vector<std::string>& phrases) {
    for (const auto& phrase : phrases) {
        std::size_t pos = 0;
        while ((pos = lowered.find(phrase, pos)) != std::string_view::npos) {
            std::size_t i = pos + phrase.size();
            if (i < lowered.size() && lowered[i] == ' ' && i + 1 < lowered.size() &&
                lowered[i + 1] >= '0' && lowered[i + 1] <= '9')
                return true;
            ++pos;
        }
    }
    return false;
}

bool has_step_number(std::string_view lowered) {
    static const std::regex re(R"(\bstep [0-9])");
    return std::regex_search(lowered.begin(), lowered.end(), re);
}

// Schema-looking line: "{...}" / "[...]" literal or a fenced block.
bool looks_like_schema(std::string_view trimmed) {
    if (trimmed.find("```") != std::string_view::npos) return true;
    if (trimmed.empty()) return false;
    if (trimmed.front() == '{' || trimmed.front() == '[') {
        return trimmed.find(':') != std::string_view::npos ||
               trimmed.find('"') != std::string_view::npos;
    }
    return false;
}

std::string first_word(std::string_view lowered) {
    std::size_t b = 0;
    while (b < lowered.size() && !std::isalpha(static_cast<unsigned char>(lowered[b])))
        ++b;
    std::size_t e = b;
    while (e < lowered.size() && std::isalpha(static_cast<unsigned char>(lowered[e])))
        ++e;
    return std::string(lowered.substr(b, e - b));
}

} // namespace

std::vector<SentenceLabel> classify_sentences(const PromptTemplate& tpl,
                                              const SegmenterRules& rules) {
    const std::vector<Sentence> sentences = split_sentences(tpl.text);

    // enumerated sentences in runs of >= 2 are workflow steps
    std::vector<bool> in_enum_run(sentences.size(), false);
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (!sentences[i].enumerated) continue;
        const bool prev = i > 0 && sentences[i - 1].enumerated;
        const bool next = i + 1 < sentences.size() && sentences[i + 1].enumerated;
        in_enum_run[i] = prev || next;
    }

    std::vector<SentenceLabel> labels;
    labels.reserve(sentences.size());
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        const Sentence& s = sentences[i];
        std::string_view raw = std::string_view(tpl.text).substr(s.span.begin, s.span.size());
        const std::string lowered = text::to_lower(raw);

        int matches = 0;
        ComponentKind kind = ComponentKind::Others;
        auto consider = [&](bool fired, ComponentKind k) {
            if (!fired) return;
            ++matches;
            if (kind == ComponentKind::Others) kind = k;
        };

        consider(any_leading(lowered, rules.constraints_leading) ||
                     has_numeric_bound(lowered, rules.bound_phrases),
                 ComponentKind::Constraints);
        consider(any_contains(lowered, rules.output_format_contains) ||
                     looks_like_schema(text::trim(raw)),
                 ComponentKind::OutputFormatStyle);
        consider(any_contains(lowered, rules.workflow_contains) ||
                     has_step_number(lowered) || in_enum_run[i],
                 ComponentKind::Workflow);
        {
            const std::string fw = first_word(lowered);
            consider(any_contains(lowered, rules.examples_contains) ||
                         fw == "example" || fw == "examples",
                     ComponentKind::Examples);
        }
        consider(any_leading(lowered, rules.profile_leading), ComponentKind::ProfileRole);
        consider(any_contains(lowered, rules.context_contains), ComponentKind::Context);

        if (kind == ComponentKind::Others) {
            const bool question = !lowered.empty() && lowered.back() == '?';
            const std::string fw = first_word(lowered);
            const bool imperative =
                std::find(rules.directive_verbs.begin(), rules.directive_verbs.end(),
                          fw) != rules.directive_verbs.end() &&
                text::starts_with(lowered, fw); // verb must be the leading word
            if (question || imperative) {
                kind = ComponentKind::Directive;
                ++matches;
            }
        }

        labels.push_back({s, kind, matches});
    }
    return labels;
}

std::vector<ComponentSpan> segment(const PromptTemplate& tpl,
                                   const SegmenterRules& rules) {
    const std::vector<SentenceLabel> labels = classify_sentences(tpl, rules);
    std::vector<ComponentSpan> spans;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!spans.empty() && spans.back().kind == labels[i].kind &&
            spans.back().last_sentence + 1 == i) {
            spans.back().span.end = labels[i].sentence.span.end;
            spans.back().last_sentence = i;
        } else {
            ComponentSpan cs;
            cs.kind = labels[i].kind;
            cs.span = labels[i].sentence.span;
            cs.first_sentence = cs.last_sentence = i;
            spans.push_back(cs);
        }
    }
    return spans;
}

namespace {

const std::vector<std::pair<std::string, ComponentKind>>& label_aliases() {
    using K = ComponentKind;
    static const std::vector<std::pair<std::string, ComponentKind>> aliases = {
        {"profile/role", K::ProfileRole},
        {"profile", K::ProfileRole},
        {"role", K::ProfileRole},
        {"persona", K::ProfileRole},
        {"capacity and role", K::ProfileRole},
        {"capacity", K::ProfileRole},
        {"directive", K::Directive},
        {"instruction", K::Directive},
        {"goal", K::Directive},
        {"statement", K::Directive},
        {"objective", K::Directive},
        {"task", K::Directive},
        {"workflow", K::Workflow},
        {"workflows", K::Workflow},
        {"reasoning steps", K::Workflow},
        {"steps", K::Workflow},
        {"context", K::Context},
        {"initialization", K::Context},
        {"insights", K::Context},
        {"background", K::Context},
        {"examples", K::Examples},
        {"example", K::Examples},
        {"input data", K::Examples},
        {"few-shot examples", K::Examples},
        {"few shot examples", K::Examples},
        {"output format/style", K::OutputFormatStyle},
        {"output format", K::OutputFormatStyle},
        {"output", K::OutputFormatStyle},
        {"output-format", K::OutputFormatStyle},
        {"output indicator", K::OutputFormatStyle},
        {"response format", K::OutputFormatStyle},
        {"format", K::OutputFormatStyle},
        {"style", K::OutputFormatStyle},
        {"personality", K::OutputFormatStyle},
        {"constraints", K::Constraints},
        {"constraint", K::Constraints},
        {"restrictions", K::Constraints},
        {"others", K::Others},
        {"other", K::Others},
    };
    return aliases;
}

} // namespace

ComponentKind canonicalize_label(std::string_view raw, double threshold) {
    const std::string lowered = text::to_lower(text::trim(raw));
    if (lowered.empty()) return ComponentKind::Others;

    double best = 0.0;
    ComponentKind best_kind = ComponentKind::Others;
    for (const auto& [alias, kind] : label_aliases()) {
        const double r = text::similarity_ratio(lowered, alias);
        if (r > best) {
            best = r;
            best_kind = kind;
        }
    }
    return best >= threshold ? best_kind : ComponentKind::Others;
}

std::set<ComponentKind> component_presence(const std::vector<ComponentSpan>& spans) {
    std::set<ComponentKind> present;
    for (const auto& s : spans)
        if (s.kind != ComponentKind::Others) present.insert(s.kind);
    return present;
}

std::vector<ComponentKind> component_order(const std::vector<ComponentSpan>& spans) {
    std::vector<ComponentKind> order;
    for (const auto& s : spans) {
        if (s.kind == ComponentKind::Others) continue;
        if (std::find(order.begin(), order.end(), s.kind) == order.end())
            order.push_back(s.kind);
    }
    return order;
}

MatchScores score_against_gold(
    const std::map<std::string, std::vector<ComponentSpan>>& predicted,
    const std::map<std::string, GoldLabeling>& gold) {
    if (predicted.size() != gold.size())
        throw Error("IdMismatch", "predicted and gold cover different template sets");
    for (const auto& [id, spans] : predicted) {
        (void)spans;
        if (!gold.contains(id))
            throw Error("IdMismatch", "gold labeling missing for template '" + id + "'");
    }

    std::size_t total_identified = 0;
    std::size_t total_correct = 0;
    std::size_t templates_with_identified = 0;
    std::size_t exact_templates = 0;
    std::size_t partial_templates = 0; // exact or partial

    for (const auto& [id, spans] : predicted) {
        const GoldLabeling& g = gold.at(id);
        std::size_t identified = 0;
        std::size_t correct = 0;
        for (const auto& span : spans) {
            if (span.kind == ComponentKind::Others) continue;
            ++identified;
            std::size_t gold_in_range = 0;
            bool all_agree = true;
            for (const auto& [sentence, kind] : g.labels) {
                if (sentence < span.first_sentence || sentence > span.last_sentence)
                    continue;
                ++gold_in_range;
                if (kind != span.kind) all_agree = false;
            }
            if (gold_in_range > 0 && all_agree) ++correct;
        }
        total_identified += identified;
        total_correct += correct;
        if (identified > 0) {
            ++templates_with_identified;
            if (correct == identified) ++exact_templates;
            if (correct >= 1) ++partial_templates;
        }
    }

    if (total_identified == 0)
        throw Error("NoIdentified", "no components identified in any template");

    MatchScores scores;
    scores.precision = static_cast<double>(total_correct) /
                       static_cast<double>(total_identified);
    scores.p_full = static_cast<double>(exact_templates) /
                    static_cast<double>(templates_with_identified);
    scores.p_partial = static_cast<double>(partial_templates) /
                       static_cast<double>(templates_with_identified);
    return scores;
}

} // namespace tplint
