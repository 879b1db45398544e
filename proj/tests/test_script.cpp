#include <doctest.h>

#include "grantha/error.hpp"
#include "grantha/script.hpp"
#include "grantha/utf8.hpp"

using namespace grantha;

namespace {

const char* kMap =
    "# test map\n"
    "U+11315\tU+0D15\tconsonant\n"
    "U+11337\tU+0D37\tconsonant\n"
    "U+11330\tU+0D30\tconsonant\n"
    "U+1133E\tU+0D3E\tvowel_sign\n"
    "U+1134D\tU+0D4D\tvirama\n";

std::size_t table_error_line(const std::string& map, const std::string& rules) {
    try {
        ScriptTables::parse(map, rules);
    } catch (const TableError& e) {
        return e.line();
    }
    FAIL("expected a table error");
    return 0;
}

}  // namespace

TEST_CASE("built-in tables") {
    const auto& t = ScriptTables::builtin();
    CHECK(t.mappings().size() == 68);
    CHECK(t.rules().size() == 76);
    CHECK(t.classify(0x11315) == CharClass::consonant);
    CHECK(t.classify(0x11347) == CharClass::prebase_sign);
    CHECK(t.classify(0x1134D) == CharClass::virama);
    CHECK(t.classify(U'a') == CharClass::other);
    CHECK(t.to_malayalam(0x11315) == U'ക');
    CHECK_FALSE(t.to_malayalam(0x11350).has_value());
    for (const auto& m : t.mappings()) CHECK(m.malayalam == m.grantha - 0x11300 + 0x0D00);
}

TEST_CASE("conjunct decomposition and composition") {
    const auto& t = ScriptTables::builtin();
    const auto& kssa = t.decompose("kssa");
    CHECK(kssa.kind == ConjunctKind::combining);
    CHECK(kssa.parts == U"\U00011315\U00011337");
    CHECK(t.compose(kssa.parts, ConjunctKind::combining) == "kssa");
    CHECK_FALSE(t.compose(kssa.parts, ConjunctKind::stacking).has_value());
    CHECK(t.decompose("ttva").parts.size() == 3);
    CHECK(t.find_by_parts(U"\U00011330\U00011315")->id == "rka");
    CHECK(t.find_by_parts(U"\U00011315\U00011316") == nullptr);
    try {
        t.decompose("xyz");
        FAIL("expected unknown conjunct");
    } catch (const UnknownConjunctError& e) {
        CHECK(e.id() == "xyz");
        CHECK(e.code() == "unknown_conjunct");
    }
}

TEST_CASE("enum names round trip") {
    for (auto c : {CharClass::vowel, CharClass::vowel_sign, CharClass::consonant, CharClass::conjunct,
                   CharClass::virama, CharClass::anusvara, CharClass::visarga, CharClass::prebase_sign,
                   CharClass::other})
        CHECK(parse_char_class(to_string(c)) == c);
    for (auto k : {ConjunctKind::stacking, ConjunctKind::combining, ConjunctKind::r_sign, ConjunctKind::y_sign})
        CHECK(parse_conjunct_kind(to_string(k)) == k);
    CHECK_FALSE(parse_char_class("letter").has_value());
}

TEST_CASE("new-script helpers") {
    for (char32_t c : {0x0D0C, 0x0D60, 0x0D61, 0x0D44, 0x0D62, 0x0D63}) CHECK(absent_in_new_script(c));
    CHECK_FALSE(absent_in_new_script(0x0D43));
    CHECK(chillu_for(U'ന') == U'ൻ');
    CHECK(chillu_for(U'ക') == U'ൿ');
    CHECK(chillu_for(U'ര') == U'ർ');
    CHECK_FALSE(chillu_for(U'ത').has_value());
}

TEST_CASE("table parsing errors carry line numbers") {
    CHECK_NOTHROW(ScriptTables::parse(kMap, "kssa\tcombining\tU+11315,U+11337\n"));
    const std::string map = kMap;
    CHECK(table_error_line(map + "U+11315\tU+0D15\n", "") == 7);
    CHECK(table_error_line(map + "U+0041\tU+0D15\tconsonant\n", "") == 7);
    CHECK(table_error_line(map + "U+11316\tU+0041\tconsonant\n", "") == 7);
    CHECK(table_error_line(map + "U+11316\tU+0D16\tletter\n", "") == 7);
    CHECK(table_error_line(map + "U+11316\tU+0D16\tconjunct\n", "") == 7);
    CHECK(table_error_line(map + "U+11315\tU+0D15\tconsonant\n", "") == 7);
    CHECK(table_error_line("U+11315\tU+0D15\tconsonant\n", "") == 0);  // no virama
    CHECK(table_error_line(map, "\nkk\tstacking\tU+11315\n") == 2);
    CHECK(table_error_line(map, "kx\tstacking\tU+11315,U+11316\n") == 1);
    CHECK(table_error_line(map, "kk\tfused\tU+11315,U+11315\n") == 1);
    CHECK(table_error_line(map, "kr\tr_sign\tU+11315,U+11337\n") == 1);
    CHECK(table_error_line(map, "ky\ty_sign\tU+11315,U+11330\n") == 1);
    CHECK(table_error_line(map, "k4\tstacking\tU+11315,U+11315,U+11315,U+11315\n") == 1);
    CHECK(table_error_line(map, "a\tstacking\tU+11315,U+11315\nb\tcombining\tU+11315,U+11315\n") == 2);
    CHECK(table_error_line(map, "a\tstacking\tU+11315,U+11315\na\tcombining\tU+11315,U+11337\n") == 2);
}

TEST_CASE("loading tables from files") {
    const auto t = ScriptTables::load(std::string(GRANTHA_DATA_DIR) + "/grantha_malayalam.tsv",
                                      std::string(GRANTHA_DATA_DIR) + "/conjuncts.tsv");
    CHECK(t.mappings().size() == ScriptTables::builtin().mappings().size());
    CHECK(t.rules() == ScriptTables::builtin().rules());
    CHECK_THROWS_AS(ScriptTables::load("/nonexistent/map.tsv", "/nonexistent/rules.tsv"), TableError);
}
