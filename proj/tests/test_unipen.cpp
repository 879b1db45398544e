#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "grantha/error.hpp"
#include "grantha/unipen.hpp"
#include "oracles.hpp"

using namespace grantha;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(GRANTHA_TEST_FIXTURES) + "/" + name, std::ios::binary);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <class E>
std::size_t error_line(const std::string& text) {
    try {
        parse_unipen(text);
    } catch (const E& e) {
        return e.line();
    }
    FAIL("expected an exception");
    return 0;
}

}  // namespace

TEST_CASE("golden UNIPEN file") {
    const auto doc = parse_unipen_document(fixture("golden.unipen"));
    CHECK(doc.version == "1.0");
    CHECK(doc.hierarchy == "CHARACTER");
    CHECK(doc.x_dim == 640.0);
    CHECK(doc.y_dim == 480.0);
    CHECK(doc.comments == std::vector<std::string>{".COMMENT two Grantha symbols", ".WRITER w01"});
    REQUIRE(doc.samples.size() == 2);

    const auto& ka = doc.samples[0];
    CHECK(ka.label == "U+11315");
    REQUIRE(ka.strokes.size() == 2);
    CHECK(ka.strokes[0].points == std::vector<Point>{{10, 20, 0}, {15, 25, 8}, {20, 20, 16}});
    CHECK(ka.strokes[1].points == std::vector<Point>{{12, 30, 40}, {18, 30, 48}});

    const auto& sa = doc.samples[1];
    CHECK(sa.label == "say \"sa\"");
    REQUIRE(sa.strokes.size() == 1);
    // No T column: timestamps are running point indices.
    CHECK(sa.strokes[0].points == std::vector<Point>{{1.5, 2, 0}, {2.5, -3, 1}, {4, 0.25, 2}});

    CHECK(parse_unipen_document(write_unipen(doc)) == doc);
}

TEST_CASE("randomized write/parse round trip") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> real(-1e4, 1e4);
    std::uniform_int_distribution<int> label(0, 3);
    const char* labels[] = {"ka", "U+11315", "quote\"and\\slash", "\xE0\xB4\x95"};
    for (int trial = 0; trial < 50; ++trial) {
        auto s = oracle::random_ink(rng);
        for (auto& st : s.strokes)
            for (auto& p : st.points) p.x = real(rng), p.y = real(rng);
        s.label = labels[label(rng)];
        const std::vector<InkSample> one{s};
        const auto back = parse_unipen(write_unipen(one));
        REQUIRE(back.size() == 1);
        CHECK(back[0] == s);
    }
}

TEST_CASE("malformed lines are parse errors with line numbers") {
    CHECK(error_line<ParseError>(".VERSION 1.0\n.COORD X\n") == 2);
    CHECK(error_line<ParseError>(".SEGMENT WORD \"x\"\n") == 1);
    CHECK(error_line<ParseError>(".SEGMENT CHARACTER \"x\n") == 1);
    CHECK(error_line<ParseError>(".SEGMENT CHARACTER \"x\"\n.PEN_DOWN\n1 2 3 4\n.PEN_UP\n") == 3);
    CHECK(error_line<ParseError>(".SEGMENT CHARACTER \"x\"\n.PEN_DOWN\n1 abc\n.PEN_UP\n") == 3);
    CHECK(error_line<ParseError>(". bad\n") == 1);
}

TEST_CASE("pen-state violations are structural errors") {
    CHECK(error_line<StructuralError>(".PEN_DOWN\n1 2\n.PEN_UP\n") == 1);
    CHECK(error_line<StructuralError>(".SEGMENT CHARACTER \"x\"\n.PEN_UP\n") == 2);
    CHECK(error_line<StructuralError>(".SEGMENT CHARACTER \"x\"\n.PEN_DOWN\n.PEN_DOWN\n") == 3);
    CHECK(error_line<StructuralError>(".SEGMENT CHARACTER \"x\"\n.PEN_DOWN\n.PEN_UP\n") == 3);
    CHECK(error_line<StructuralError>(".SEGMENT CHARACTER \"x\"\n1 2\n") == 2);
    CHECK(error_line<StructuralError>(".SEGMENT CHARACTER \"x\"\n.PEN_DOWN\n1 2\n") == 2);
    CHECK(error_line<StructuralError>(".SEGMENT CHARACTER \"x\"\n.SEGMENT CHARACTER \"y\"\n") == 1);
}

TEST_CASE("loading a directory reads files in path order") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "grantha_unipen_dir_test";
    fs::remove_all(dir);
    fs::create_directories(dir / "sub");
    std::ofstream(dir / "b.unipen") << ".SEGMENT CHARACTER \"b\"\n.PEN_DOWN\n0 0\n.PEN_UP\n";
    std::ofstream(dir / "sub" / "a.upn") << ".SEGMENT CHARACTER \"a\"\n.PEN_DOWN\n0 0\n.PEN_UP\n";
    std::ofstream(dir / "notes.txt") << "ignored";
    const auto samples = load_unipen_path(dir.string());
    REQUIRE(samples.size() == 2);
    CHECK(samples[0].label == "b");
    CHECK(samples[1].label == "a");

    std::ofstream(dir / "c.unipen") << ".PEN_UP\n";
    try {
        load_unipen_path(dir.string());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "structural_error");
        CHECK(std::string(e.what()).find("c.unipen") != std::string::npos);
    }
    CHECK_THROWS_AS(load_unipen_path((dir / "missing").string()), ArgumentError);
    fs::remove_all(dir);
}
