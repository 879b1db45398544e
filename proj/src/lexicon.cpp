#include "grantha/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "grantha/error.hpp"
#include "grantha/script.hpp"
#include "grantha/utf8.hpp"

namespace grantha {

namespace {

bool rank_less(const std::u32string& a, const std::u32string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::u32string strip_zwnj(std::u32string_view s) {
    std::u32string out;
    for (char32_t c : s) {
        if (c != cp::kZwnj) out.push_back(c);
    }
    return out;
}

}  // namespace

Lexicon::Lexicon(std::vector<std::u32string> words) {
    std::erase_if(words, [](const std::u32string& w) { return w.empty(); });
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    sorted_ = words;
    ranked_ = std::move(words);
    std::sort(ranked_.begin(), ranked_.end(), rank_less);
}

Lexicon Lexicon::parse(std::string_view text, const std::string& source) {
    std::vector<std::u32string> words;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto b = line.find_first_not_of(" \t");
        if (b != std::string_view::npos) {
            const auto e = line.find_last_not_of(" \t");
            line = line.substr(b, e - b + 1);
            if (line.find_first_of(" \t") != std::string_view::npos) {
                throw TableError(source, line_no, "one word per line expected");
            }
            try {
                words.push_back(utf8::decode(line));
            } catch (const ArgumentError& err) {
                throw TableError(source, line_no, err.what());
            }
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return Lexicon(std::move(words));
}

Lexicon Lexicon::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TableError(path, 0, "cannot open lexicon");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

bool Lexicon::contains(std::u32string_view word) const {
    return std::binary_search(sorted_.begin(), sorted_.end(), word,
                              [](auto const& a, auto const& b) { return std::u32string_view(a) < std::u32string_view(b); });
}

std::vector<std::u32string> Lexicon::suggest(std::u32string_view fragment, std::size_t limit) const {
    std::vector<std::u32string> hits;
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), fragment,
                               [](const std::u32string& w, std::u32string_view f) { return std::u32string_view(w) < f; });
    for (; it != sorted_.end() && std::u32string_view(*it).substr(0, fragment.size()) == fragment; ++it) {
        hits.push_back(*it);
    }
    std::sort(hits.begin(), hits.end(), rank_less);
    if (hits.size() > limit) hits.resize(limit);
    return hits;
}

std::optional<std::u32string> Lexicon::nearest(std::u32string_view word, std::size_t max_distance) const {
    const auto probe = strip_zwnj(word);
    std::optional<std::u32string> best;
    std::size_t best_distance = max_distance + 1;
    for (const auto& w : ranked_) {
        const auto stripped = strip_zwnj(w);
        const std::size_t gap = stripped.size() > probe.size() ? stripped.size() - probe.size()
                                                              : probe.size() - stripped.size();
        if (gap >= best_distance) continue;
        const std::size_t d = edit_distance(probe, stripped);
        if (d < best_distance) {
            best_distance = d;
            best = w;
        }
    }
    return best;
}

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

std::vector<WordSpan> segment_spans(std::span<const std::u32string> pieces, const Lexicon& lexicon) {
    std::vector<WordSpan> out;
    std::size_t unknown_begin = 0;
    bool in_unknown = false;
    std::size_t p = 0;
    while (p < pieces.size()) {
        std::u32string joined;
        std::size_t match_end = 0;
        for (std::size_t q = p; q < pieces.size(); ++q) {
            joined += pieces[q];
            if (lexicon.contains(joined)) match_end = q + 1;
        }
        if (match_end == 0) {
            if (!in_unknown) unknown_begin = p;
            in_unknown = true;
            ++p;
            continue;
        }
        if (in_unknown) out.push_back({unknown_begin, p, false});
        in_unknown = false;
        out.push_back({p, match_end, true});
        p = match_end;
    }
    if (in_unknown) out.push_back({unknown_begin, pieces.size(), false});
    return out;
}

std::vector<WordToken> segment_words(std::span<const std::u32string> pieces, const Lexicon& lexicon) {
    std::vector<WordToken> out;
    for (const auto& span : segment_spans(pieces, lexicon)) {
        WordToken token{{}, span.known};
        for (std::size_t q = span.begin; q < span.end; ++q) token.text += pieces[q];
        out.push_back(std::move(token));
    }
    return out;
}

}  // namespace grantha
