#include "grantha/conversion.hpp"

#include <algorithm>

#include "grantha/error.hpp"
#include "grantha/utf8.hpp"

namespace grantha {

namespace {

using Severity = ConversionNote::Severity;

// Each absent vowel may be spelled with up to three code points in the
// reformed script (e.g. vocalic L sign -> virama, LA, I sign).
constexpr std::size_t kEditsPerAbsentVowel = 3;

// Appends parts joined by virama. Old style keeps the first join bare and
// marks later ones with ZWNJ; new style marks every join.
void join_parts(std::u32string& out, std::u32string_view parts, bool old_style) {
    if (parts.empty()) return;
    out.push_back(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k) {
        out.push_back(cp::kMalayalamVirama);
        if (!old_style || k >= 2) out.push_back(cp::kZwnj);
        out.push_back(parts[k]);
    }
}

class WordConverter {
public:
    WordConverter(const ScriptTables& tables, const Lexicon& lexicon) : tables_(tables), lexicon_(lexicon) {}

    ConversionResult run(std::u32string_view word) {
        std::u32string w = compose_split_vowels(reorder_prebase(word, tables_));
        std::size_t i = 0;
        while (i < w.size()) {
            if (tables_.classify(w[i]) == CharClass::consonant) {
                i = cluster(w, i);
            } else {
                single(w[i]);
                ++i;
            }
        }
        if (absent_ > 0) intellisense();
        return std::move(result_);
    }

private:
    static std::u32string compose_split_vowels(std::u32string w) {
        std::u32string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == cp::kGranthaSignEe && i + 1 < w.size()) {
                if (w[i + 1] == cp::kGranthaSignAa) {
                    out.push_back(cp::kGranthaSignOo);
                    ++i;
                    continue;
                }
                if (w[i + 1] == cp::kGranthaAuLength) {
                    out.push_back(cp::kGranthaSignAu);
                    ++i;
                    continue;
                }
            }
            out.push_back(w[i]);
        }
        return out;
    }

    char32_t map(char32_t g) const { return *tables_.to_malayalam(g); }

    // Consumes C (virama C)* [virama] starting at `i`; returns the next index.
    std::size_t cluster(const std::u32string& w, std::size_t i) {
        std::u32string parts{w[i]};
        std::size_t e = i + 1;
        while (e + 1 < w.size() && tables_.classify(w[e]) == CharClass::virama &&
               tables_.classify(w[e + 1]) == CharClass::consonant) {
            parts.push_back(w[e + 1]);
            e += 2;
        }
        const bool trailing_virama = e < w.size() && tables_.classify(w[e]) == CharClass::virama;
        if (trailing_virama) ++e;
        const bool word_final = e == w.size();

        auto& old_out = result_.old_script;
        auto& new_out = result_.new_script;
        if (parts.size() == 1) {
            const char32_t m = map(parts[0]);
            old_out.push_back(m);
            if (trailing_virama) {
                old_out.push_back(cp::kMalayalamVirama);
                const auto chillu = chillu_for(m);
                if (word_final && chillu) {
                    new_out.push_back(*chillu);
                } else {
                    new_out.push_back(m);
                    new_out.push_back(cp::kMalayalamVirama);
                }
            } else {
                new_out.push_back(m);
            }
            return e;
        }

        const ConjunctRule* rule = tables_.find_by_parts(parts);
        if (!rule) {
            std::string id;
            for (char32_t c : parts) id += (id.empty() ? "" : "+") + utf8::to_uplus(c);
            throw UnknownConjunctError(id);
        }
        std::u32string mapped;
        for (char32_t c : parts) mapped.push_back(map(c));
        const std::u32string_view mv(mapped);

        switch (rule->kind) {
            case ConjunctKind::stacking:
            case ConjunctKind::combining:
                join_parts(old_out, mv, true);
                join_parts(new_out, mv, false);
                break;
            case ConjunctKind::r_sign:
                if (rule->parts.front() == cp::kGranthaRa) {
                    old_out.push_back(cp::kMalayalamDotReph);
                    join_parts(old_out, mv.substr(1), true);
                    new_out.push_back(cp::kMalayalamChilluRr);
                    join_parts(new_out, mv.substr(1), false);
                } else {
                    subscript_sign(mv, cp::kMalayalamRa);
                }
                break;
            case ConjunctKind::y_sign:
                subscript_sign(mv, cp::kMalayalamYa);
                break;
        }
        if (trailing_virama) {
            old_out.push_back(cp::kMalayalamVirama);
            new_out.push_back(cp::kMalayalamVirama);
        }
        return e;
    }

    // Prefix consonants followed by the RA or YA consonant sign, which both
    // scripts keep.
    void subscript_sign(std::u32string_view mapped, char32_t sign_consonant) {
        const auto prefix = mapped.substr(0, mapped.size() - 1);
        join_parts(result_.old_script, prefix, true);
        join_parts(result_.new_script, prefix, false);
        for (auto* out : {&result_.old_script, &result_.new_script}) {
            out->push_back(cp::kMalayalamVirama);
            out->push_back(sign_consonant);
        }
    }

    void single(char32_t g) {
        const auto m = tables_.to_malayalam(g);
        if (!m) {
            result_.notes.push_back(
                {Severity::warning, "unmapped", utf8::to_uplus(g) + " has no Malayalam equivalent and was omitted"});
            return;
        }
        if (absent_in_new_script(*m)) ++absent_;
        result_.old_script.push_back(*m);
        result_.new_script.push_back(*m);
    }

    void intellisense() {
        const auto provisional = result_.new_script;
        if (auto word = lexicon_.nearest(provisional, kEditsPerAbsentVowel * absent_)) {
            result_.notes.push_back({Severity::info, "intellisense", "intellisense: new script lacks a vowel in '" +
                                                         utf8::encode(provisional) + "'; using lexicon word '" +
                                                         utf8::encode(*word) + "'"});
            result_.new_script = std::move(*word);
        } else {
            result_.notes.push_back({Severity::warning, "intellisense_miss", "no lexicon word close to '" + utf8::encode(provisional) +
                                                            "'; new script keeps the old-script vowel"});
        }
    }

    const ScriptTables& tables_;
    const Lexicon& lexicon_;
    ConversionResult result_;
    std::size_t absent_ = 0;
};

}  // namespace

bool ConversionResult::has_warnings() const noexcept {
    return std::any_of(notes.begin(), notes.end(), [](const auto& n) { return n.severity == Severity::warning; });
}

std::u32string reorder_prebase(std::u32string_view word, const ScriptTables& tables) {
    std::u32string out;
    out.reserve(word.size());
    std::size_t i = 0;
    while (i < word.size()) {
        const char32_t c = word[i];
        const bool attached = !out.empty() && tables.classify(out.back()) == CharClass::consonant;
        if (tables.classify(c) != CharClass::prebase_sign || attached) {
            out.push_back(c);
            ++i;
            continue;
        }
        const std::size_t j = i + 1;
        if (j >= word.size() || tables.classify(word[j]) != CharClass::consonant) {
            throw MalformedWordError("prebase sign " + utf8::to_uplus(c) + " at position " + std::to_string(i) +
                                     " is not followed by a consonant");
        }
        std::size_t e = j + 1;
        while (e + 1 < word.size() && tables.classify(word[e]) == CharClass::virama &&
               tables.classify(word[e + 1]) == CharClass::consonant) {
            e += 2;
        }
        out.append(word.substr(j, e - j));
        out.push_back(c);
        i = e;
    }
    return out;
}

ConversionResult convert_word(std::u32string_view word, const Lexicon& lexicon, const ScriptTables& tables) {
    return WordConverter(tables, lexicon).run(word);
}

ConversionResult convert_text(std::u32string_view text, const Lexicon& lexicon, const ScriptTables& tables) {
    ConversionResult all;
    std::size_t i = 0;
    auto is_space = [](char32_t c) { return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r'; };
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j])) ++j;
        if (j == i) break;
        auto r = convert_word(text.substr(i, j - i), lexicon, tables);
        if (!all.old_script.empty()) {
            all.old_script.push_back(U' ');
            all.new_script.push_back(U' ');
        }
        all.old_script += r.old_script;
        all.new_script += r.new_script;
        std::move(r.notes.begin(), r.notes.end(), std::back_inserter(all.notes));
        i = j;
    }
    return all;
}

}  // namespace grantha
