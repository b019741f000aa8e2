#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

using namespace rebit;
using cli::Json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
    const char* dir = std::getenv("REBIT_EXAMPLES");
    return std::string(dir ? dir : "tests/data") + "/" + name;
}

}  // namespace

TEST_CASE("cycnum text form") {
    CHECK(cli::cyc_text(CycNum(3, 4)) == "3/4");
    CHECK(cli::cyc_text(CycNum::i()) == "0,0,0,0,1,0,0,0");
    CHECK(cli::cyc_parse("-2/6") == CycNum(-1, 3));
    CHECK(cli::cyc_parse("0,0,0,0,1,0,0,0") == CycNum::i());
}

TEST_CASE("tensor and group element JSON round trip") {
    Tensor t = Tensor::basis("0101").scaled(CycNum::eta(3)) - Tensor::basis("1110");
    CHECK(cli::tensor_from_json(Json::parse(cli::tensor_json(t).dump())) == t);
    GElt g = GElt::parse_names("(L,-K,D(eta^3),MJ)");
    CHECK(cli::gelt_from_json(Json::parse(cli::gelt_json(g).dump())) == g);
    Json bad = cli::gelt_json(g);
    bad["factors"][0][0][0] = "2";
    CHECK_THROWS_AS(cli::gelt_from_json(bad), MathError);
    CHECK_THROWS_AS(cli::tensor_from_json(Json::parse(R"({"coeffs": {"012": "1"}})")), ParseError);
}

TEST_CASE("classify GHZ") {
    auto r = run({"classify", data("ghz4.json")});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["type"] == "semisimple");
    CHECK(j["i"] == 10);
    CHECK(j["j"] == 1);
    CHECK(j["k"] == 1);
    CHECK(j["lambda"] == Json::array({"1"}));
}

TEST_CASE("classify and decompose a mixed state") {
    auto r = run({"classify", data("mixed.json")});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["type"] == "mixed");
    CHECK(j["i"] == 2);
    CHECK(j["r"] == 1);
    auto d = run({"decompose", data("mixed.json")});
    REQUIRE(d.code == 0);
    auto dj = Json::parse(d.out);
    CHECK(dj["nilpotent"]["coeffs"] == Json::parse(R"({"0011": "1"})"));
    CHECK(dj["semisimple"]["coeffs"].size() == 6);
}

TEST_CASE("general position gives a family report") {
    auto r = run({"classify", data("generic.json")});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK((j["type"] == "family" || j["type"] == "semisimple"));
}

TEST_CASE("output is deterministic") {
    CHECK(run({"invariants", data("mixed.json")}).out == run({"invariants", data("mixed.json")}).out);
    CHECK(run({"classify", data("ghz4.json")}).out == run({"classify", data("ghz4.json")}).out);
}

TEST_CASE("invariants") {
    auto r = run({"invariants", data("ghz4.json")});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j.contains("H"));
    CHECK(j.contains("L12"));
}

TEST_CASE("h1 queries") {
    auto r = run({"h1", "--group", "normalizer"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["classes"] == 7);
    auto g = run({"h1", "--group", "gamma:2"});
    REQUIRE(g.code == 0);
    CHECK(Json::parse(g.out)["classes"] == 8);
    auto c = run({"h1", "--group", "centralizer:10"});
    REQUIRE(c.code == 0);
    CHECK(Json::parse(c.out)["classes"] == 5);
    CHECK(run({"h1", "--group", "bogus"}).code == cli::kMalformed);
}

TEST_CASE("tables") {
    auto v = run({"tables", "verify", "--case", "10"});
    CHECK(v.code == 0);
    CHECK(Json::parse(v.out)["semisimple"]["ok"] == true);
    auto e = run({"tables", "emit", "--what", "rows", "--case", "10:1", "--sample-lambda", "3"});
    REQUIRE(e.code == 0);
    CHECK(Json::parse(e.out)["rows"].size() == 5);
    CHECK(run({"tables", "emit", "--what", "rows", "--case", "10:1", "--sample-lambda", "0"}).code == cli::kInvalid);
    auto w = run({"tables", "emit", "--what", "weyl"});
    REQUIRE(w.code == 0);
    CHECK(Json::parse(w.out).size() == 192);
}

TEST_CASE("error exit codes") {
    CHECK(run({"classify", data("malformed.json")}).code == cli::kMalformed);
    CHECK(run({"classify", data("missing.json")}).code == cli::kMalformed);
    auto nr = run({"classify", data("nonreal.json")});
    CHECK(nr.code == cli::kInvalid);
    CHECK(nr.err.find("not a real state") != std::string::npos);
    auto u = run({"frobnicate"});
    CHECK(u.code == cli::kUsage);
    CHECK(u.err.find("Usage") != std::string::npos);
}
