/*
   Copyright 2026 The ffdigits Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ffdigits/cli.hpp"

using namespace ffdigits;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::string& line) {
    std::ostringstream out, err;
    const int code = run_cli(split_args(line), out, err);
    return {code, out.str(), err.str()};
}

std::string without_timing(const std::string& s) {
    return std::regex_replace(s, std::regex(R"("wall_time_ms": [0-9.e+-]+)"), "\"wall_time_ms\": 0");
}

}  // namespace

TEST_CASE("weight set syntax") {
    CHECK(parse_weights("0,2", 5) == WeightSet::of(5, {0, 2}));
    CHECK(parse_weights("1..3", 5) == WeightSet::of(5, {1, 2, 3}));
    CHECK(parse_weights("0, 2..3 ,5", 5) == WeightSet::of(5, {0, 2, 3, 5}));
    CHECK(parse_weights("all", 4) == WeightSet::all(4));
    CHECK(parse_weights("interior", 4) == WeightSet::of(4, {1, 2, 3}));
    CHECK_THROWS_AS(parse_weights("6", 5), UsageError);
    CHECK_THROWS_AS(parse_weights("", 5), UsageError);
    CHECK_THROWS_AS(parse_weights("1,,2", 5), UsageError);
    CHECK_THROWS_AS(parse_weights("a", 5), UsageError);
    CHECK_THROWS_AS(parse_weights("3..1", 5), UsageError);
    CHECK(parse_range("2..10") == std::pair<unsigned, unsigned>{2, 10});
    CHECK(parse_range("7") == std::pair<unsigned, unsigned>{7, 7});
}

TEST_CASE("config round trips through its canonical form") {
    const char* lines[] = {
        "verify thm-q2 --n 2..10 --out r.json",
        "verify thm-qgt2 --q 3 --n 4 --workers 3 --format csv",
        "verify support-period --n 3..5 --seed 9 --trials 20 --format text --cap-bits 20",
        "search --q 2 --n 5 --W 0,2 --c 1",
        "search --q 3 --n 2 --W 1 --c 0 --relation ne",
        "period delta --q 3 --n 2 --W \"0, 2\"",
        "certify --q 2 --n 3 --poly x^3+x+1 --cross-check --out \"my report.json\"",
        "field --p 3 --s 2 --n 2 --format text",
        "field --q 16 --n 1",
    };
    for (const char* line : lines) {
        const CliConfig cfg = parse_cli(split_args(line));
        const CliConfig again = parse_cli(split_args(cfg.canonical()));
        CHECK_MESSAGE(again == cfg, line << " -> " << cfg.canonical());
        CHECK(again.canonical() == cfg.canonical());
    }
    const CliConfig cfg = parse_cli(split_args("certify --q 2 --n 3 --poly x^3+x+1 --out \"my report.json\""));
    CHECK(cfg.out == "my report.json");
    CHECK(split_args("a \"b c\" d") == std::vector<std::string>{"a", "b c", "d"});
    CHECK_THROWS_AS(split_args("a \"b"), UsageError);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("verify thm-q2 --n 1").code == 2);
    CHECK(run("verify thm-q2 --n 3 --q 3").code == 2);
    CHECK(run("verify nonsense --n 3").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("search --q 2 --n 4 --W 9 --c 0").code == 2);
    CHECK(run("search --q 2 --n 4 --W 1 --c 5").code == 2);
    CHECK(run("search --q 6 --n 4 --W 1 --c 0").code == 2);
    CHECK(run("certify --q 2 --n 3 --poly 1,z").code == 2);
    CHECK(run("certify --q 2 --n 3 --poly x^^3").code == 2);
    CHECK(run("period delta --q 2 --n 4").code == 2);
    CHECK(run("verify thm-q2 --n 3 --format yaml").code == 2);
    const Run help = run("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("search") {
    const Run a = run("search --q 2 --n 5 --W 0,2 --c 1 --format text");
    CHECK(a.code == 0);
    CHECK(a.out.rfind("x^5", 0) == 0);
    const Run b = run("search --q 2 --n 4 --W all --c 0 --format text");
    CHECK(b.code == 1);
    CHECK(b.out == "NONE (exhausted)\n");
    const Run c = run("search --q 3 --n 2 --W 1 --c 0 --relation ne --format text");
    CHECK(c.code == 0);
    CHECK(c.out == "x^2+x+2\n");
    const auto j = nlohmann::json::parse(run("search --q 2 --n 4 --W 1,2 --c 1").out);
    CHECK(j.at("witness") == "1,1,0,0,1");
    const Run csv = run("search --q 2 --n 4 --W all --c 0 --format csv");
    CHECK(csv.out == "q,n,c,W,relation,witness\n2,4,0,0;1;2;3;4,eq,NONE\n");
}

TEST_CASE("period") {
    CHECK(run("period delta --q 2 --n 6 --W 1,3 --format text").out == "63\n");
    CHECK(run("period delta --q 3 --n 2 --W 0,2 --format text").out == "4\n");
    CHECK(run("period delta --q 2 --n 4 --W 0 --format text").out == "15\n");
    const auto j = nlohmann::json::parse(run("period gamma --q 3 --n 3 --W 1 --c 2").out);
    CHECK(j.at("N") == 26);
    CHECK(j.at("c") == 2);
    CHECK(run("period Delta --q 2 --n 4 --W 1,2 --c 1").code == 0);
}

TEST_CASE("certify") {
    const Run a = run("certify --q 2 --n 3 --poly 1,1,0,1");
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j.contains("verdict"));
    CHECK(j.contains("least_period"));
    CHECK(j.at("threshold") == "1");
    CHECK(a.code == (j.at("verdict") == "DegreeNFactorGuaranteed" ? 0 : 1));
    const Run b = run("certify --q 2 --n 6 --poly x^6+x+1 --format text");
    CHECK(b.out.find("r=") != std::string::npos);
    const Run c = run("certify --q 2 --n 2 --poly x^2");
    CHECK(c.code == 1);
}

TEST_CASE("field") {
    const Run a = run("field --p 2 --s 2 --n 3 --format text");
    CHECK(a.code == 0);
    CHECK(a.out.find("F_64") != std::string::npos);
    const auto j = nlohmann::json::parse(run("field --q 9 --n 2").out);
    CHECK(j.at("q") == 9);
    CHECK(j.at("group_order") == 80);
}

TEST_CASE("verify exit codes and reports") {
    const Run a = run("verify thm-q2 --n 2..6");
    CHECK(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 5);
    for (const auto& r : j) CHECK(r.at("match") == true);
    const Run b = run("verify hansen-mullen --n 2..12 --format text");
    CHECK(b.code == 0);
    const Run c = run("verify thm-qgt2 --q 3 --n 4");
    CHECK(c.code == 1);
    CHECK(c.err.find("c=1 W={4}") != std::string::npos);
    const Run d = run("verify support-period --n 3..4 --trials 50");
    CHECK(d.code == 0);
    CHECK(run("verify thm-q2 --n 3 --format csv").out.rfind("kind,q,n,c,W,witness\n", 0) == 0);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
    const Run a = run("verify thm-q2 --n 2..10 --workers 1");
    const Run b = run("verify thm-q2 --n 2..10 --workers 8");
    const Run c = run("verify thm-q2 --n 2..10");
    CHECK(without_timing(a.out) == without_timing(b.out));
    CHECK(without_timing(a.out) == without_timing(c.out));
    CHECK(a.out.find("wall_time_ms") != std::string::npos);
}

TEST_CASE("out file") {
    const auto path = std::filesystem::temp_directory_path() / "ffdigits_cli_test.json";
    const Run a = run("verify thm-q2 --n 3 --out " + path.string());
    CHECK(a.code == 0);
    CHECK(a.out.empty());
    std::ifstream f(path);
    const auto j = nlohmann::json::parse(f);
    CHECK(j.at(0).at("match") == true);
    std::filesystem::remove(path);
    CHECK(run("verify thm-q2 --n 3 --out /nonexistent/dir/x.json").code == 2);
}
