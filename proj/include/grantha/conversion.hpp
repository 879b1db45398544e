#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "grantha/lexicon.hpp"
#include "grantha/script.hpp"

namespace grantha {

struct ConversionNote {
    enum class Severity { info, warning };

    Severity severity = Severity::info;
    /// "unmapped", "intellisense" or "intellisense_miss".
    std::string code;
    std::string message;

    friend bool operator==(const ConversionNote&, const ConversionNote&) = default;
};

struct ConversionResult {
    std::u32string old_script;
    std::u32string new_script;
    std::vector<ConversionNote> notes;

    bool has_warnings() const noexcept;
};

/// Moves every prebase vowel sign that is not already attached to a
/// consonant behind the consonant cluster that follows it (visual ->
/// logical order). Idempotent. A sign with no following consonant raises
/// MalformedWordError.
std::u32string reorder_prebase(std::u32string_view word, const ScriptTables& tables = ScriptTables::builtin());

/// Converts one Grantha word to old and new Malayalam script.
///
/// Old script keeps two-consonant conjuncts joined (C + virama + C) and
/// writes any further joins with an explicit virama (C + virama + ZWNJ),
/// uses the dot reph for a leading RA, and keeps every vowel. New script
/// writes all stacking and combining joins explicitly, a leading RA as
/// chillu RR, a word-final pure consonant as its chillu, and replaces words
/// containing vowels it lacks by the nearest lexicon entry.
///
/// Throws MalformedWordError and UnknownConjunctError.
ConversionResult convert_word(std::u32string_view word, const Lexicon& lexicon,
                              const ScriptTables& tables = ScriptTables::builtin());

/// convert_word on each whitespace-separated word; outputs are joined by a
/// single space.
ConversionResult convert_text(std::u32string_view text, const Lexicon& lexicon,
                              const ScriptTables& tables = ScriptTables::builtin());

}  // namespace grantha
