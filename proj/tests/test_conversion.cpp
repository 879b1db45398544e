#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "grantha/conversion.hpp"
#include "grantha/error.hpp"
#include "grantha/utf8.hpp"

using namespace grantha;

namespace {

const Lexicon& golden_lexicon() {
    static const Lexicon lex = Lexicon::load(std::string(GRANTHA_TEST_FIXTURES) + "/golden_lexicon.txt");
    return lex;
}

bool has_note(const ConversionResult& r, const std::string& code) {
    for (const auto& n : r.notes)
        if (n.code == code) return true;
    return false;
}

constexpr char32_t KA = 0x11315, SSA = 0x11337, EE = 0x11347, AI = 0x11348, AA = 0x1133E, VIRAMA = 0x1134D,
                   NA = 0x11328, TA = 0x11324, RA = 0x11330;

}  // namespace

TEST_CASE("golden transliterations") {
    const auto cases = load_golden(std::string(GRANTHA_TEST_FIXTURES) + "/transliteration_golden.tsv");
    REQUIRE(cases.size() >= 40);
    for (const auto& c : cases) {
        CAPTURE(c.id);
        const auto r = convert_word(utf8::decode(c.grantha), golden_lexicon());
        CHECK(utf8::encode(r.old_script) == c.old_script);
        CHECK(utf8::encode(r.new_script) == c.new_script);
    }
}

TEST_CASE("single KA maps to Malayalam KA in both scripts") {
    const auto r = convert_word(U"\U00011315", Lexicon{});
    CHECK(r.old_script == U"ക");
    CHECK(r.new_script == U"ക");
    CHECK(r.notes.empty());
}

TEST_CASE("prebase reordering") {
    CHECK(reorder_prebase(std::u32string{EE, KA}) == std::u32string{KA, EE});
    CHECK(reorder_prebase(std::u32string{EE, KA, VIRAMA, SSA, AA}) == std::u32string{KA, VIRAMA, SSA, EE, AA});
    CHECK(reorder_prebase(std::u32string{KA, EE}) == std::u32string{KA, EE});
    CHECK_THROWS_AS(reorder_prebase(std::u32string{KA, AA, AI}), MalformedWordError);
    CHECK_THROWS_AS(reorder_prebase(std::u32string{EE}), MalformedWordError);
    CHECK_THROWS_AS(convert_word(std::u32string{EE, AA}, Lexicon{}), MalformedWordError);
}

TEST_CASE("reordering is idempotent") {
    std::mt19937_64 rng(31);
    const std::vector<char32_t> alphabet{KA, SSA, EE, AI, AA, VIRAMA, NA, TA, 0x11305};
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(1, 10);
    int checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::u32string w;
        for (std::size_t i = len(rng); i > 0; --i) w.push_back(alphabet[pick(rng)]);
        std::u32string once;
        try {
            once = reorder_prebase(w);
        } catch (const MalformedWordError&) {
            continue;
        }
        CHECK(reorder_prebase(once) == once);
        ++checked;
    }
    CHECK(checked > 200);
}

TEST_CASE("unknown conjuncts and unmapped characters") {
    try {
        convert_word(std::u32string{KA, VIRAMA, NA}, Lexicon{});
        FAIL("expected an unknown conjunct");
    } catch (const UnknownConjunctError& e) {
        CHECK(e.id() == "U+11315+U+11328");
    }
    const auto r = convert_word(std::u32string{KA, 0x11350}, Lexicon{});
    CHECK(r.old_script == U"ക");
    CHECK(has_note(r, "unmapped"));
    CHECK(r.has_warnings());
}

TEST_CASE("intellisense notes") {
    const auto hit = convert_word(std::u32string{KA, 0x11362, 0x1132A, VIRAMA, TA}, golden_lexicon());
    CHECK(has_note(hit, "intellisense"));
    CHECK_FALSE(hit.has_warnings());
    const auto miss = convert_word(std::u32string{0x1130C}, Lexicon{});
    CHECK(miss.new_script == U"ഌ");
    CHECK(has_note(miss, "intellisense_miss"));
    CHECK(miss.has_warnings());
}

TEST_CASE("whitespace-separated text") {
    const auto r = convert_text(U"  \U00011315\t\U00011330\U0001133E\U0001132E\n", Lexicon{});
    CHECK(r.old_script == U"ക രാമ");
    CHECK(r.new_script == U"ക രാമ");
    CHECK(convert_text(U"   ", Lexicon{}).old_script.empty());
    // Leading RA reph versus a lone trailing RA.
    CHECK(convert_word(std::u32string{RA, VIRAMA, KA}, Lexicon{}).new_script == U"ർക");
}
