#include <doctest.h>

#include <cmath>
#include <limits>

#include "grantha/error.hpp"
#include "grantha/ink.hpp"
#include "grantha/utf8.hpp"

using namespace grantha;

TEST_CASE("utf8 round trip across plane boundaries") {
    const std::u32string text = U"aéക\U00011315\U0010FFFF";
    const std::string bytes = utf8::encode(text);
    CHECK(bytes.size() == 1 + 2 + 3 + 4 + 4);
    CHECK(utf8::decode(bytes) == text);
    CHECK(utf8::encode(U'\U00011315') == "\xF0\x91\x8C\x95");
}

TEST_CASE("utf8 rejects malformed input") {
    CHECK_THROWS_AS(utf8::decode("\xC0\xAF"), ArgumentError);          // overlong
    CHECK_THROWS_AS(utf8::decode("\xED\xA0\x80"), ArgumentError);      // surrogate
    CHECK_THROWS_AS(utf8::decode("\xE0\xB4"), ArgumentError);          // truncated
    CHECK_THROWS_AS(utf8::decode("\x80"), ArgumentError);              // stray continuation
    CHECK_THROWS_AS(utf8::decode("\xF4\x90\x80\x80"), ArgumentError);  // above U+10FFFF
}

TEST_CASE("U+ notation") {
    CHECK(utf8::to_uplus(U'ക') == "U+0D15");
    CHECK(utf8::to_uplus(U'\U00011315') == "U+11315");
    CHECK(utf8::to_uplus(std::u32string_view(U"കാ")) == "U+0D15 U+0D3E");
    char32_t cp = 0;
    CHECK(utf8::parse_uplus("u+0d15", cp));
    CHECK(cp == 0x0D15);
    CHECK_FALSE(utf8::parse_uplus("U+", cp));
    CHECK_FALSE(utf8::parse_uplus("U+110000", cp));
    CHECK_FALSE(utf8::parse_uplus("0D15", cp));
    CHECK_FALSE(utf8::parse_uplus("U+0D1G", cp));
}

TEST_CASE("validate lists every broken invariant") {
    InkSample ok{{Stroke{{{0, 0, 0}, {1, 1, 1}}}}, "ka"};
    CHECK(validate(ok).empty());
    CHECK(ok.point_count() == 2);

    CHECK(validate(InkSample{}) == std::vector<std::string>{"sample has no strokes"});

    InkSample bad{{Stroke{}, Stroke{{{0, std::numeric_limits<double>::quiet_NaN(), 5}, {1, 1, 2}}}}, {}};
    const auto v = validate(bad);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == "empty stroke at index 0");
    CHECK(v[1] == "non-finite coordinate at stroke 1 point 0");
    CHECK(v[2] == "decreasing timestamp at stroke 1 point 1");
}

TEST_CASE("label code points") {
    CHECK(codepoints_for_label("U+11315") == U"\U00011315");
    CHECK(codepoints_for_label("U+11315 U+1134D") == U"\U00011315\U0001134D");
    CHECK(codepoints_for_label("\xF0\x91\x8C\x95") == U"\U00011315");
    CHECK(codepoints_for_label("ka") == U"ka");
}
