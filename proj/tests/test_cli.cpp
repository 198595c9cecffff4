/*
   Copyright 2026 The unirule Authors

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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "unirule/cli.hpp"
#include "unirule/error.hpp"

using namespace unirule;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "unirule_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p);
    return {std::istreambuf_iterator<char>(f), {}};
}

bool int_or_null(const nlohmann::json& j) { return j.is_null() || j.is_number_integer(); }

// Checks a certificate against the documented schema and key order.
void check_schema(const std::string& text) {
    const auto j = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    REQUIRE(keys == std::vector<std::string>{"ambient_n", "degrees", "field", "method", "count", "coefficient",
                                             "residue", "modulus", "verdict", "smoothness", "classification"});
    CHECK(j["ambient_n"].is_number_integer());
    REQUIRE(j["degrees"].is_array());
    for (const auto& d : j["degrees"]) CHECK(d.is_number_integer());
    CHECK(j["field"].size() == 2);
    CHECK(j["field"]["p"].is_number_integer());
    CHECK(j["field"]["k"].is_number_integer());
    CHECK((j["method"] == "point-count" || j["method"] == "hasse-coefficient"));
    CHECK(int_or_null(j["count"]));
    CHECK(int_or_null(j["coefficient"]));
    CHECK(j["residue"].is_number_integer());
    CHECK(j["modulus"].is_number_integer());
    CHECK((j["verdict"] == "not-geometrically-uniruled" || j["verdict"] == "inconclusive"));
    CHECK(j["smoothness"]["kind"].is_string());
    CHECK(int_or_null(j["smoothness"]["probe_depth"]));
    CHECK((j["smoothness"]["witness"].is_null() || j["smoothness"]["witness"].is_array()));
    CHECK((j["classification"] == "fano" || j["classification"] == "calabi-yau" ||
           j["classification"] == "general-type"));
}

const std::string kCubic = "x0^3+x1^3+x2^3";

}  // namespace

TEST_CASE("run examples") {
    const auto a = run_cli({"certify", "--field", "7", "--ambient", "2", "--poly", kCubic});
    CHECK(a.code == 0);
    check_schema(a.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["verdict"] == "not-geometrically-uniruled");
    CHECK(j["count"] == 9);
    CHECK(j["residue"] == 2);

    const auto b = run_cli({"bounds", "-n", "3", "-d", "5", "--format", "text"});
    CHECK(b.code == 0);
    CHECK(b.out.find(">= 1") != std::string::npos);
    CHECK(b.out.find("yes") != std::string::npos);
    CHECK(b.out.find("55") != std::string::npos);

    const auto c = run_cli({"certify", "--field", "7", "--ambient", "2", "--poly", "x0^2+x1"});
    CHECK(c.code == 1);
    CHECK(c.err.find("NotHomogeneous") != std::string::npos);
    CHECK(c.out.empty());
}

TEST_CASE("certificates from every command path validate") {
    check_schema(run_cli({"certify", "--field", "2", "-n", "2", "--poly", kCubic}).out);
    check_schema(run_cli({"certify", "--field", "5", "-n", "3", "--poly", "x0^4+x1^4+x2^4+x3^4"}).out);
    check_schema(run_cli({"certify", "--field", "2^2", "-n", "2", "--poly", kCubic}).out);
    check_schema(run_cli({"certify", "--field", "5", "-n", "2", "--poly", "x0^2+x1*x2"}).out);
    check_schema(run_cli({"certify", "--field", "3", "-n", "2", "--poly", kCubic, "--smoothness", "assert"}).out);
    check_schema(run_cli({"certify", "--field", "5", "-n", "4", "--poly", "x0^2+x1^2+x2^2+x3^2+x4^2", "--poly",
                          "x1^2+2*x2^2+3*x3^2+4*x4^2"})
                     .out);
    check_schema(run_cli({"hasse", "--field", "7", "-n", "2", "--poly", kCubic, "--verify"}).out);
    check_schema(run_cli({"hasse", "--field", "5", "-n", "2", "--poly", kCubic}).out);

    const auto h = nlohmann::json::parse(run_cli({"hasse", "--field", "7", "-n", "2", "--poly", kCubic, "--verify"}).out);
    CHECK(h["coefficient"] == 6);
    CHECK(h["count"] == 9);
}

TEST_CASE("singular and malformed inputs exit 1") {
    const auto s = run_cli({"certify", "--field", "3", "-n", "2", "--poly", kCubic});
    CHECK(s.code == 1);
    CHECK(s.err.find("SingularInput") != std::string::npos);
    CHECK(run_cli({"certify", "--field", "6", "-n", "2", "--poly", kCubic}).code == 1);
    CHECK(run_cli({"certify", "--field", "7", "-n", "2", "--poly", "x0^3+x3^3"}).code == 1);
    CHECK(run_cli({"hasse", "--field", "7", "-n", "3", "--poly", "x0^5+x1^5+x2^5+x3^5"}).code == 1);
    CHECK(run_cli({"certify", "--field", "7", "-n", "2"}).code == 1);
    CHECK(run_cli({"certify", "--field", "7", "-n", "2", "--poly", kCubic, "--format", "xml"}).code == 1);
    CHECK(run_cli({"nonsense"}).code == 1);
    CHECK(run_cli({"bounds", "-n", "2", "-d", "1,1,1"}).code == 1);
}

TEST_CASE("budget errors exit 2") {
    const auto r = run_cli({"count", "--field", "101", "-n", "3", "--poly", "x0^4+x1^4+x2^4+x3^4", "--budget", "1000"});
    CHECK(r.code == 2);
    CHECK(r.err.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("UNIRULE_BUDGET provides the default budget") {
    const std::vector<std::string> args{"count", "--field", "31", "-n", "3", "--poly", "x0^4+x1^4+x2^4+x3^4"};
    ::setenv("UNIRULE_BUDGET", "100", 1);
    CHECK(run_cli(args).code == 2);
    auto with_flag = args;
    with_flag.insert(with_flag.end(), {"--budget", "10000000"});
    CHECK(run_cli(with_flag).code == 0);
    ::setenv("UNIRULE_BUDGET", "oops", 1);
    CHECK(run_cli(args).code == 1);
    ::unsetenv("UNIRULE_BUDGET");
    CHECK(run_cli(args).code == 0);
}

TEST_CASE("output is identical across worker counts and repeated runs") {
    const std::vector<std::vector<std::string>> cases{
        {"certify", "--field", "11", "-n", "3", "--poly", "x0^3+x1^3+x2^3+x3^3+x0*x1*x2", "--smoothness", "assert"},
        {"certify", "--field", "2^3", "-n", "2", "--poly", "x0^2*x1+x1^2*x2+x2^2*x0"},
        {"count", "--field", "13", "-n", "3", "--poly", "x0^2+x1^2+x2^2+x3^2"},
        {"hasse", "--field", "7", "-n", "3", "--poly", "x0^4+x1^4+x2^4+x3^4+x0*x1*x2*x3", "--verify", "--probe-depth", "2"},
        {"fermat-scan", "--p-range", "2..40", "--d-range", "3..6", "--n-range", "2..3", "--verify"},
        {"bounds", "-n", "4", "-d", "2,3", "--format", "csv"},
    };
    for (const auto& base : cases) {
        std::string first;
        for (const std::string w : {"1", "2", "8", "1"}) {
            auto args = base;
            args.insert(args.end(), {"--workers", w});
            const auto r = run_cli(args);
            REQUIRE(r.code == 0);
            if (first.empty()) first = r.out;
            CHECK(r.out == first);
        }
    }
}

TEST_CASE("config files") {
    const auto scan = scratch("scan.conf");
    write_file(scan, "# Fermat table\ncommand = fermat-scan\np_range = 2..50\nd_range = 3..10\nn-range = 3\n");
    const auto r = run_cli({"--config", scan.string()});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "p,d,n,coprime,sk_applicable,sk_nu,unirational,paper_nonuniruled,verified_coefficient");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == 15 * 8);

    SUBCASE("flags override the file") {
        const auto o = run_cli({"--config", scan.string(), "--p-range", "5..7"});
        CHECK(o.code == 0);
        CHECK(std::count(o.out.begin(), o.out.end(), '\n') == 1 + 2 * 8);
        const auto t = run_cli({"--config", scan.string(), "--format", "json"});
        CHECK(t.out.front() == '{');
    }
    SUBCASE("certify config with a subcommand on the command line") {
        const auto cert = scratch("cert.conf");
        write_file(cert, "field = 7\nambient = 2\npoly = x0^3 + x1^3 + x2^3   # Fermat cubic\n");
        const auto c = run_cli({"certify", "--config", cert.string()});
        CHECK(c.code == 0);
        CHECK(nlohmann::json::parse(c.out)["count"] == 9);
        const auto c5 = run_cli({"certify", "--config", cert.string(), "--field", "5"});
        CHECK(nlohmann::json::parse(c5.out)["modulus"] == 5);
    }
    SUBCASE("unknown key") {
        const auto bad = scratch("bad.conf");
        write_file(bad, "command = bounds\nfoo = 1\n");
        const auto b = run_cli({"--config", bad.string()});
        CHECK(b.code == 1);
        CHECK(b.err.find("UnknownKey") != std::string::npos);
    }
    SUBCASE("syntax errors") {
        const auto bad = scratch("syntax.conf");
        write_file(bad, "command bounds\n");
        const auto b = run_cli({"--config", bad.string()});
        CHECK(b.code == 1);
        CHECK(b.err.find("ConfigSyntax") != std::string::npos);
        CHECK(run_cli({"--config", scratch("missing.conf").string()}).code == 1);
    }
}

TEST_CASE("parse_config and merge") {
    std::istringstream in("field = 2^3\nseed = 9\npoly = x0\npoly = x1\nverify = true\n");
    auto cfg = cli::parse_config(in);
    CHECK(cfg.field == "2^3");
    CHECK(cfg.seed == 9u);
    CHECK(cfg.polys == std::vector<std::string>{"x0", "x1"});
    CHECK(cfg.verify == true);
    cli::RunConfig flags;
    flags.seed = 3;
    const auto m = cli::merge(cfg, flags);
    CHECK(m.seed == 3u);
    CHECK(m.field == "2^3");
    CHECK(m.polys.size() == 2);

    CHECK(cli::parse_range("2..9").lo == 2);
    CHECK(cli::parse_range("2..9").hi == 9);
    CHECK(cli::parse_range("4").hi == 4);
    CHECK_THROWS_AS(cli::parse_range("a..b"), Error);
}

TEST_CASE("poly files and output paths") {
    const auto polys = scratch("ci.poly");
    write_file(polys, "# two quadrics\nx0^2 + x1^2 + x2^2 + x3^2 + x4^2\n\nx0*x1 + x2*x3 + 2*x4^2\n");
    const auto out = scratch("ci.json");
    fs::remove(out);
    const auto r = run_cli({"certify", "--field", "5", "-n", "4", "--poly-file", polys.string(), "--smoothness",
                            "assert", "--out", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    const auto text = read_file(out);
    check_schema(text);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["degrees"] == nlohmann::json::array({2, 2}));
    CHECK(j["classification"] == "fano");

    CHECK(run_cli({"certify", "--field", "5", "-n", "4", "--poly-file", scratch("none.poly").string()}).code == 1);
    CHECK(run_cli({"certify", "--field", "5", "-n", "4", "--poly-file", polys.string(), "--poly", "x0"}).code == 1);
}

TEST_CASE("extension field seed is recorded and reproducible") {
    const std::vector<std::string> args{"certify", "--field", "3^2", "-n", "2", "--poly", "x0^2 + x1*x2", "--seed", "5"};
    const auto a = run_cli(args);
    CHECK(a.code == 0);
    CHECK(run_cli(args).out == a.out);
    const auto extended = run_cli({"certify", "--field", "2^2", "-n", "2", "--poly", "{0,1}*x0^3 + x1^3 + x2^3"});
    CHECK(extended.code == 0);
}

TEST_CASE("verify does not change verdicts") {
    for (const std::string p : {"2", "5", "7", "11"}) {
        const std::vector<std::string> base{"hasse", "--field", p, "-n", "2", "--poly", "x0^3+x1^3+x2^3+x0*x1*x2",
                                            "--smoothness", "assert"};
        auto v = base;
        v.push_back("--verify");
        const auto a = nlohmann::json::parse(run_cli(base).out);
        const auto b = nlohmann::json::parse(run_cli(v).out);
        CHECK(a["verdict"] == b["verdict"]);
        CHECK(a["coefficient"] == b["coefficient"]);
    }
}
