#pragma once

#include "tplint/template.hpp"

#include <string_view>
#include <vector>

namespace tplint {

// A sentence unit for component labeling. Newlines are hard boundaries;
// within a line text splits on ". ", "! ", "? " outside quotes and braces.
// Enumerators ("1.", "2)") do not end a sentence.
struct Sentence {
    ByteSpan span;              // trimmed extent in the source text
    std::size_t line = 0;       // 0-based line of the sentence start
    bool enumerated = false;    // starts with "<digits>." or "<digits>)"
    bool bullet = false;        // starts with "-", "*" or "+" plus space
};

std::vector<Sentence> split_sentences(std::string_view text);

} // namespace tplint
