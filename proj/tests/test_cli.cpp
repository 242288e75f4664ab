#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rmconv/cli.hpp"

using rmconv::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli dump") {
    const auto r = call({"dump", "--m", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1010101\n  0110011\n  0001111\n") != std::string::npos);
    CHECK(r.out.find("X1 X3 X5 X7") != std::string::npos);
    const auto j = nlohmann::json::parse(call({"dump", "--m", "4", "--json"}).out);
    CHECK(j["schema"] == "rmconv/1");
    CHECK(j["h_tilde"].size() == 6);
}

TEST_CASE("cli convert") {
    const auto r = call({"convert", "--m", "3", "--direction", "fwd", "--error", "none", "--branch", "001"});
    CHECK(r.code == 0);
    CHECK(r.out.find("correction: X12 X13 X14 X15") != std::string::npos);
    const auto j = nlohmann::json::parse(
        call({"convert", "--m", "3", "--direction", "bwd", "--error", "Z:5", "--branch", "all", "--json"}).out);
    CHECK(j["reports"].size() == 8);
    CHECK(j["reports"][0]["diagnosis"]["z_error_qubit"] == 5);
    CHECK(j["reports"][0]["raw_syndromes"].contains("S'11"));
}

TEST_CASE("cli usage errors") {
    CHECK(call({"convert", "--m", "3", "--error", "Q:99"}).code == 2);
    CHECK(call({"convert", "--m", "3", "--error", "X:16"}).code == 2);
    CHECK(call({"convert", "--m", "3", "--branch", "01"}).code == 2);
    CHECK(call({"convert", "--m", "3", "--direction", "sideways"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({}).code == 2);
    const auto r = call({"convert", "--m", "3", "--error", "Q:99"});
    CHECK(r.err.find("Q") != std::string::npos);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("cli verification failure exit code") {
    CHECK(call({"convert", "--m", "3", "--error", "X:1,X:2", "--branch", "000"}).code == 1);
}

TEST_CASE("cli seeded output is reproducible") {
    const std::vector<std::string> args{"convert", "--m", "4", "--direction", "bwd", "--error", "Y:9",
                                        "--branch", "random:99", "--json"};
    const auto a = call(args), b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto o1 = call({"oracle", "--trials", "5", "--seed", "3", "--json"});
    const auto o2 = call({"oracle", "--trials", "5", "--seed", "3", "--json"});
    CHECK(o1.code == 0);
    CHECK(o1.out == o2.out);
}

TEST_CASE("cli sweep writes json") {
    const std::string path = "cli_sweep_test.json";
    const auto r = call({"sweep", "--m", "3", "--direction", "fwd", "--mode", "ft", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("368/368 pass") != std::string::npos);
    std::ifstream f(path);
    const auto j = nlohmann::json::parse(f);
    CHECK(j["schema"] == "rmconv/1");
    CHECK(j["sections"][0]["passed"] == 368);
    std::remove(path.c_str());
}

TEST_CASE("cli cost") {
    const auto r = call({"cost"});
    CHECK(r.code == 0);
    CHECK(r.out.find("50.5000") != std::string::npos);
    CHECK(r.out.find("37.5000") != std::string::npos);
    CHECK(r.out.find("delta (adp14 - ours) = 13.0000") != std::string::npos);
    CHECK(r.out.find("external primitive cost tables") != std::string::npos);
    CHECK(call({"cost", "--config", "/nonexistent.json"}).code == 2);
}
