#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lrc/cli.hpp"
#include "lrc/codefile.hpp"

using namespace lrc;

namespace {

struct Run {
    int code;
    Json out;
    std::string text;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    Run r{code, {}, out.str()};
    if (!r.text.empty() && r.text.find('\n') == r.text.size() - 1 || r.text.find("{\n") == 0) {
        r.out = Json::parse(r.text);
    }
    return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("lrc_cli_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("analyze reports Hamming and repetition codes") {
    const auto hamming = temp_file("hamming.json", R"({"q":2,"n":7,"k":4,"generator":[[1,0,0,0,1,1,0],[0,1,0,0,1,0,1],[0,0,1,0,0,1,1],[0,0,0,1,1,1,1]]})");
    auto r = cli({"analyze", hamming});
    CHECK(r.code == 0);
    CHECK(r.out["d"] == 3);
    CHECK(r.out["hierarchy"]["dims"] == Json::array({3, 5, 6, 7}));
    CHECK(r.out["wei_duality"] == "pass");
    CHECK(r.out["largest_dual_gap"]["status"] == "pass");

    const auto rep = temp_file("rep.json", R"({"q":3,"n":3,"k":1,"generator":[[1,1,1]]})");
    r = cli({"analyze", rep});
    CHECK(r.out["d"] == 3);
    CHECK(r.out["mds"] == true);
    CHECK(r.out["hierarchy"]["gaps"] == Json::array({1, 2}));
}

TEST_CASE("malformed code files are parse errors") {
    const auto bad = temp_file("bad.json", R"({"q":3,"n":3,"k":2,"generator":[[1,1,1],[2,2,2]]})");
    auto r = cli({"analyze", bad});
    CHECK(r.code == 1);
    CHECK(r.out["error"]["code"] == "ParseError");
    CHECK(r.out["error"]["message"].get<std::string>().find("[1]") != std::string::npos);

    r = cli({"analyze", temp_file("garbage.json", "{not json")});
    CHECK(r.out["error"]["code"] == "ParseError");
    r = cli({"analyze", temp_file("shape.json", R"({"q":3,"n":4,"k":1,"generator":[[1,1,1]]})")});
    CHECK(r.out["error"]["code"] == "ParseError");
    r = cli({"analyze", "/nonexistent/file.json"});
    CHECK(r.code == 1);
}

TEST_CASE("construct, certify and replay through files") {
    const auto path = (std::filesystem::temp_directory_path() / "lrc_cli_test_ps.json").string();
    auto r = cli({"construct", "--kind", "parity-split", "--k", "3", "--r", "2", "--delta", "2", "--q", "7", "-o", path});
    CHECK(r.code == 0);
    CHECK(r.text.empty());
    const CodeFile file = read_codefile(path);
    CHECK(file.code.n() == 6);
    REQUIRE(file.profile);
    REQUIRE(file.recipe);
    CHECK(replay(*file.recipe).code.generator() == file.code.generator());
    CHECK(to_json(codefile_from_json(to_json(file))) == to_json(file));

    r = cli({"certify", path});
    CHECK(r.code == 0);
    CHECK(r.out["tight"] == true);
    CHECK(r.out["measured_d"] == 3);
}

TEST_CASE("certify exits 1 on an invalid profile but not on a loose bound") {
    const auto path = temp_file("loose.json", R"({"q":5,"n":4,"k":2,"generator":[[1,1,0,0],[0,0,1,1]],
        "locality":{"r":2,"delta":2,"mode":"all_symbol","groups":[
          {"index":0,"support":[0,1],"local_check":[[1,4]]},
          {"index":2,"support":[2,3],"local_check":[[1,4]]}]}})");
    auto r = cli({"certify", path});
    CHECK(r.code == 0);
    CHECK(r.out["tight"] == false);
    CHECK(r.out["bound_d"] == 3);

    const auto broken = temp_file("broken.json", R"({"q":5,"n":4,"k":1,"generator":[[1,1,1,1]],
        "locality":{"r":1,"delta":2,"mode":"all_symbol","groups":[
          {"index":0,"support":[0,1],"local_check":[[1,4]]}]}})");
    r = cli({"certify", broken});
    CHECK(r.code == 1);
    CHECK(r.out["profile_valid"] == false);
}

TEST_CASE("bound prints one object per line") {
    auto r = cli({"bound", "--n", "7", "--k", "4", "--r", "2", "--delta", "2"});
    CHECK(r.code == 0);
    std::istringstream lines(r.text);
    std::string first, second;
    std::getline(lines, first);
    std::getline(lines, second);
    CHECK(Json::parse(first)["value"] == 3);
    CHECK(Json::parse(second)["name"] == "locality");
    r = cli({"bound", "--n", "7", "--k", "4", "--r", "2", "--delta", "1"});
    CHECK(r.code == 1);
    r = cli({"bound", "--rate", "1/4", "--inner-rate", "1/2"});
    CHECK(Json::parse(r.text)["value"] == "1/2");
}

TEST_CASE("usage errors exit 1 and budgets exit 2") {
    CHECK(cli({"construct", "--kind", "random", "--k", "3", "--r", "2", "--delta", "2", "--t", "2", "--q", "13"}).code == 1);
    CHECK(cli({"simulate", "x.json"}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({}).code == 1);

    // Measurements that would exceed the budget are reported as skipped.
    const auto big = cli({"construct", "--kind", "pyramid", "--k", "16", "--r", "4", "--delta", "2", "--d", "3", "--q", "31"});
    REQUIRE(big.code == 0);
    const auto path = temp_file("big.json", big.text);
    auto r = cli({"certify", path});
    CHECK(r.code == 0);
    CHECK(r.out["measured_d"] == "skipped");
    r = cli({"analyze", path});
    CHECK(r.code == 0);
    CHECK(r.out["d"] == "skipped");

    // An adversarial scenario needs a minimum-weight codeword and cannot skip it.
    r = cli({"simulate", path, "--rounds", "1", "--fail-count", "2", "--seed", "1", "--adversarial"});
    CHECK(r.code == 2);
    CHECK(r.out["error"]["code"] == "BudgetExceeded");
}

TEST_CASE("repair and simulate") {
    const auto path = (std::filesystem::temp_directory_path() / "lrc_cli_test_pyr.json").string();
    REQUIRE(cli({"construct", "--kind", "pyramid", "--k", "4", "--r", "2", "--delta", "2", "--d", "3", "--q", "7", "-o", path})
                .code == 0);
    const CodeFile file = read_codefile(path);
    const Vector w = file.code.encode(Vector{3, 1, 4, 1});
    Json word = Json::array();
    for (auto v : w) word.push_back(v);
    auto r = cli({"repair", path, "--word", word.dump(), "--erased", "1", "--target", "1"});
    CHECK(r.code == 0);
    CHECK(r.out["method"] == "local");
    CHECK(r.out["value"] == w[1]);
    CHECK(r.out["symbols_read"]["count"] == 2);

    r = cli({"simulate", path, "--rounds", "5", "--fail-count", "1", "--seed", "2"});
    CHECK(r.code == 0);
    CHECK(r.out["rounds_run"] == 5);
    const auto again = cli({"simulate", path, "--rounds", "5", "--fail-count", "1", "--seed", "2", "--threads", "4"});
    CHECK(again.text == r.text);
}
