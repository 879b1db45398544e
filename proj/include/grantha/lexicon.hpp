#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grantha {

/// Word list used for intellisense substitution, suggestions and word
/// segmentation. Words are kept in rank order: shorter first, then by code
/// point order.
class Lexicon {
public:
    Lexicon() = default;
    explicit Lexicon(std::vector<std::u32string> words);

    /// One UTF-8 word per line; blank lines are skipped. Invalid UTF-8 or a
    /// line holding whitespace-separated text raises TableError.
    static Lexicon parse(std::string_view text, const std::string& source = "lexicon");
    static Lexicon load(const std::string& path);

    bool contains(std::u32string_view word) const;
    bool empty() const noexcept { return ranked_.empty(); }
    std::size_t size() const noexcept { return ranked_.size(); }
    const std::vector<std::u32string>& words() const noexcept { return ranked_; }

    /// Words starting with `fragment` in rank order, at most `limit`.
    std::vector<std::u32string> suggest(std::u32string_view fragment, std::size_t limit) const;

    /// The word with the smallest edit distance to `word`, provided it is at
    /// most `max_distance`; ties resolve by rank order. ZWNJ is ignored on
    /// both sides.
    std::optional<std::u32string> nearest(std::u32string_view word, std::size_t max_distance) const;

private:
    std::vector<std::u32string> sorted_;  // code point order, for prefix search
    std::vector<std::u32string> ranked_;
};

/// Levenshtein distance over code points.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);

struct WordToken {
    std::u32string text;
    bool known = false;

    friend bool operator==(const WordToken&, const WordToken&) = default;
};

struct WordSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    bool known = false;

    friend bool operator==(const WordSpan&, const WordSpan&) = default;
};

/// Piece ranges of segment_words().
std::vector<WordSpan> segment_spans(std::span<const std::u32string> pieces, const Lexicon& lexicon);

/// Greedy longest-match segmentation of a stream of recognized symbol
/// pieces against the lexicon. Maximal runs of pieces that start no lexicon
/// word pass through as one unknown token.
std::vector<WordToken> segment_words(std::span<const std::u32string> pieces, const Lexicon& lexicon);

}  // namespace grantha
