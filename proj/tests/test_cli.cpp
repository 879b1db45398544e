#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "grantha/synthetic.hpp"
#include "grantha/unipen.hpp"
#include "process.hpp"

using namespace grantha;
namespace fs = std::filesystem;

namespace {

const std::string kCli = GRANTHA_CLI_PATH;

struct Workspace {
    fs::path dir = fs::temp_directory_path() / "grantha_cli_test";

    Workspace() {
        fs::remove_all(dir);
        fs::create_directories(dir / "train");
        std::mt19937_64 rng(3);
        std::vector<InkSample> train, test;
        for (const char* id : {"line_0", "line_90", "loop_cw", "arc_up", "hook_left", "loop_ccw"}) {
            for (int i = 0; i < 3; ++i) train.push_back(synthetic::make_sample(id, rng()));
            test.push_back(synthetic::make_sample(id, rng()));
        }
        std::ofstream(dir / "train" / "all.unipen") << write_unipen(train);
        std::ofstream(dir / "test.unipen") << write_unipen(test);
        std::ofstream(dir / "one.unipen") << write_unipen(std::vector<InkSample>{train[6]});
        std::ofstream(dir / "bad.unipen") << ".PEN_UP\n";
    }
    ~Workspace() { fs::remove_all(dir); }

    std::string path(const std::string& name) const { return (dir / name).string(); }

    CommandResult run(const std::string& args) const { return run_command(kCli + " " + args); }
};

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("train, recognize and evaluate from the command line") {
    Workspace ws;
    const auto model = ws.path("m.json");
    auto r = ws.run("train --data " + ws.path("train") + " --out " + model + " --prototypes 3");
    CHECK(r.status == 0);
    CHECK(r.out == ("trained 6 classes, 18 prototypes from 18 samples -> " + model + "\n"));
    REQUIRE(fs::exists(model));

    r = ws.run("recognize --model " + model + " --input " + ws.path("one.unipen") + " --top 5");
    CHECK(r.status == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 5);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::istringstream row(out[i]);
        std::size_t rank;
        std::string cls;
        double distance, confidence;
        REQUIRE(static_cast<bool>(row >> rank >> cls >> distance >> confidence));
        CHECK(rank == i + 1);
        CHECK(distance >= 0.0);
        CHECK(confidence > 0.0);
    }
    CHECK(out[0].rfind("1 loop_cw 0 ", 0) == 0);

    r = run_command("GRANTHA_INK_MODEL=" + model + " " + kCli + " recognize --input " + ws.path("test.unipen") +
                    " --top 1 --json");
    CHECK(r.status == 0);
    CHECK(lines(r.out).size() == 6);
    CHECK(lines(r.out)[0].rfind("{\"id\":0,\"candidates\":[{\"class_id\":", 0) == 0);

    r = ws.run("eval --model " + model + " --data " + ws.path("test.unipen"));
    CHECK(r.status == 0);
    CHECK(r.out.find("accuracy") != std::string::npos);
    r = ws.run("eval --model " + model + " --data " + ws.path("test.unipen") + " --variant euclidean --json");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"variant\": \"euclidean_resampled\"") != std::string::npos);
    r = ws.run("eval --model " + model + " --data " + ws.path("test.unipen") + " --csv");
    CHECK(r.status == 0);
    CHECK(lines(r.out).size() == 7);
}

TEST_CASE("convert from the command line") {
    Workspace ws;
    auto r = ws.run("convert --text '\xF0\x91\x8C\x95'");
    CHECK(r.status == 0);
    CHECK(r.out == "\xE0\xB4\x95\n\xE0\xB4\x95\n");

    std::ofstream(ws.path("word.txt")) << "\xF0\x91\x8C\x95\xF0\x91\x8D\xA2\xF0\x91\x8C\xAA\xF0\x91\x8D\x8D\xF0\x91\x8C\xA4\n";
    r = ws.run("convert --input " + ws.path("word.txt") + " --lexicon " + std::string(GRANTHA_TEST_FIXTURES) +
               "/golden_lexicon.txt");
    CHECK(r.status == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 3);
    CHECK(out[1] == "ക്ലിപ്ത");
    CHECK(out[2].rfind("note [intellisense] ", 0) == 0);
}

TEST_CASE("exit codes") {
    Workspace ws;
    CHECK(ws.run("").status == 1);
    CHECK(ws.run("frobnicate").status == 1);
    CHECK(ws.run("train --data x").status == 1);
    CHECK(ws.run("recognize --model m.json --input x --top 0").status == 1);
    CHECK(run_command("env -u GRANTHA_INK_MODEL " + kCli + " recognize --input " + ws.path("one.unipen")).status == 1);
    CHECK(ws.run("convert").status == 1);
    CHECK(ws.run("--help").status == 0);
    CHECK(ws.run("recognize --model " + ws.path("missing.json") + " --input " + ws.path("one.unipen")).status == 2);
    CHECK(ws.run("train --data " + ws.path("bad.unipen") + " --out " + ws.path("x.json")).status == 2);
    CHECK(ws.run("convert --text '\xF0\x91\x8D\x87'").status == 2);
}
