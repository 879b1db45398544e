#include <doctest.h>

#include <random>

#include "grantha/error.hpp"
#include "grantha/lexicon.hpp"
#include "grantha/utf8.hpp"

using namespace grantha;

TEST_CASE("edit distance") {
    CHECK(edit_distance(U"", U"") == 0);
    CHECK(edit_distance(U"abc", U"") == 3);
    CHECK(edit_distance(U"kitten", U"sitting") == 3);
    CHECK(edit_distance(U"കൢപ്ത", U"ക്ലിപ്ത") == 3);
}

TEST_CASE("rank order, suggestions and membership") {
    const Lexicon lex({U"ബ", U"അമ്മ", U"അമ", U"അ", U"അമ", U""});
    CHECK(lex.size() == 4);
    CHECK(lex.words() == std::vector<std::u32string>{U"അ", U"ബ", U"അമ", U"അമ്മ"});
    CHECK(lex.contains(U"അമ"));
    CHECK_FALSE(lex.contains(U"ആ"));
    CHECK(lex.suggest(U"അമ", 10) == std::vector<std::u32string>{U"അമ", U"അമ്മ"});
    CHECK(lex.suggest(U"അ", 2) == std::vector<std::u32string>{U"അ", U"അമ"});
    CHECK(lex.suggest(U"zz", 5).empty());
    CHECK(lex.suggest(U"", 10).size() == 4);
}

TEST_CASE("nearest ignores ZWNJ and prefers rank order on ties") {
    const Lexicon lex({U"പിതൃൻ", U"ക്ലിപ്ത", U"ab", U"ac"});
    CHECK(lex.nearest(U"പിതൄൻ", 3) == U"പിതൃൻ");
    CHECK(lex.nearest(U"ക്‌ലിപ്ത", 0) == U"ക്ലിപ്ത");
    CHECK(lex.nearest(U"ad", 1) == U"ab");
    CHECK_FALSE(lex.nearest(U"xyzw", 1).has_value());
}

TEST_CASE("parsing word lists") {
    const auto lex = Lexicon::parse("\xE0\xB4\x85\n\n  \nword\r\n");
    CHECK(lex.size() == 2);
    CHECK(lex.contains(U"word"));
    try {
        Lexicon::parse("ok\ntwo words\n", "words.txt");
        FAIL("expected a table error");
    } catch (const TableError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("words.txt:2") == 0);
    }
    CHECK_THROWS_AS(Lexicon::parse("ok\n\xFF\n"), TableError);
    CHECK_THROWS_AS(Lexicon::load("/nonexistent/words.txt"), TableError);
    CHECK(Lexicon::load(std::string(GRANTHA_DATA_DIR) + "/lexicon_sample.txt").size() > 10);
}

TEST_CASE("greedy longest-match segmentation") {
    const Lexicon lex({U"ab", U"abc", U"d"});
    const std::vector<std::u32string> pieces{U"a", U"b", U"c", U"x", U"y", U"d", U"a", U"b"};
    const auto words = segment_words(pieces, lex);
    CHECK(words == std::vector<WordToken>{{U"abc", true}, {U"xy", false}, {U"d", true}, {U"ab", true}});
    CHECK(segment_spans(pieces, lex) ==
          std::vector<WordSpan>{{0, 3, true}, {3, 5, false}, {5, 6, true}, {6, 8, true}});
    CHECK(segment_words(std::vector<std::u32string>{}, lex).empty());
}

TEST_CASE("segmentation concatenates back to the input") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> letter(0, 3), len(0, 20);
    const Lexicon lex({U"a", U"ab", U"bca", U"dd", U"cab"});
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::u32string> pieces;
        std::u32string all;
        for (int i = len(rng); i > 0; --i) {
            pieces.emplace_back(1, char32_t(U'a' + letter(rng)));
            all += pieces.back();
        }
        std::u32string joined;
        for (const auto& w : segment_words(pieces, lex)) {
            CHECK(w.known == lex.contains(w.text));
            joined += w.text;
        }
        CHECK(joined == all);
    }
}
