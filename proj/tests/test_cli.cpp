#include <catch_amalgamated.hpp>

#include <sstream>

#include "nsring/cli.hpp"

using namespace nsring;

namespace {

struct cli_result {
    int code;
    std::string out, err;
};

cli_result run(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze human output", "[cli]") {
    auto r = run({"analyze", "--gens", "7,15,18,26,27"});
    CHECK(r.code == 0);
    CHECK(r.out.find("r               3") != std::string::npos);
    CHECK(r.out.find("tau             2") != std::string::npos);
    CHECK(r.out.find("e1              9") != std::string::npos);
    CHECK(r.out.find("stretched       yes") != std::string::npos);
    CHECK(r.out.find("depth G         1") != std::string::npos);
}

TEST_CASE("analyze json round-trips", "[cli]") {
    auto r = run({"analyze", "--gens", "6,13,33,40,41", "--json"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["semigroup"]["mu"] == 5);
    CHECK(doc["filtration"]["r"] == 4);
    CHECK(doc["filtration"]["n"] == 2);
    CHECK(doc["filtration"]["lambda"] == json::array({2, 3}));
    CHECK(doc["filtration"]["depth_g"] == 0);
    CHECK(doc["hilbert"]["e0"] == 6);
    CHECK(doc["hilbert"]["e1"] == 8);

    analysis direct = analyze_semigroup(build_semigroup({6, 13, 33, 40, 41}));
    CHECK(reports_equal(report_from_json(doc), direct));
    CHECK(report_to_json(report_from_json(doc))["filtration"] == doc["filtration"]);
}

TEST_CASE("analyze with explicit ideal and errors", "[cli]") {
    auto r = run({"analyze", "--gens", "6,13,34,41", "--ideal", "13,34"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Q = (u^13)") != std::string::npos);

    auto bad = run({"analyze", "--gens", "4,6"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("gcd") != std::string::npos);

    auto bad2 = run({"analyze", "--gens", "6,13,34,41", "--ideal", "7"});
    CHECK(bad2.code == 1);

    auto bad3 = run({"analyze", "--gens", "6,13,x"});
    CHECK(bad3.code == 1);
}

TEST_CASE("family command", "[cli]") {
    auto ok = run({"family", "--b", "2", "--e", "6", "--ell", "3", "--bn", "4=5,5=6"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("prediction matches computation") != std::string::npos);
    CHECK(ok.out.find("r=3") != std::string::npos);

    auto cor = run({"family", "--cor67", "--b", "2", "--e", "6", "--ell", "2", "--s", "2"});
    CHECK(cor.code == 0);
    CHECK(cor.out.find("lambda={2}") != std::string::npos);
    CHECK(cor.out.find("e1=7") != std::string::npos);

    auto bad = run({"family", "--b", "2", "--e", "6", "--ell", "3", "--bn", "4=8,5=6"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("b_{ell+1} <= b ell + b - 1") != std::string::npos);

    auto js = run({"family", "--b", "2", "--e", "6", "--ell", "2", "--bn", "3=5,4=6,5=6", "--json"});
    REQUIRE(js.code == 0);
    auto doc = json::parse(js.out);
    CHECK(doc["match"] == true);
    CHECK(doc["predicted"]["lambda"] == json::array({2, 3}));
    for (const auto& c : doc["construction_checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("search command", "[cli]") {
    auto r = run({"search", "--max-e", "6", "--max-gen", "45", "--filter",
                  "stretched && r == n+1", "--limit", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("matches") != std::string::npos);

    auto js = run({"search", "--max-e", "5", "--max-gen", "20", "--json"});
    REQUIRE(js.code == 0);
    auto arr = json::parse(js.out);
    CHECK(arr.is_array());
    CHECK(!arr.empty());

    auto bad = run({"search", "--filter", "nope == 1"});
    CHECK(bad.code == 1);
}

TEST_CASE("verify-paper command", "[cli]") {
    auto all = run({"verify-paper"});
    CHECK(all.code == 0);
    CHECK(all.out.find("all fixtures pass") != std::string::npos);
    CHECK(all.out.find("ex-5.11-4") != std::string::npos);
    CHECK(all.out.find("erratum") != std::string::npos);

    auto one = run({"verify-paper", "--fixture", "ex-6.8-2"});
    CHECK(one.code == 0);
    CHECK(one.out.find("ex-6.8-2") != std::string::npos);

    auto two = run({"verify-paper", "--fixture", "ex-5.11-4"});
    CHECK(two.code == 0);
    CHECK(two.out.find("published e0 = 9") != std::string::npos);

    auto missing = run({"verify-paper", "--fixture", "ex-0.0"});
    CHECK(missing.code == 1);

    auto dump = run({"verify-paper", "--dump-fixtures"});
    REQUIRE(dump.code == 0);
    auto arr = json::parse(dump.out);
    CHECK(arr.size() >= 15);

    auto js = run({"verify-paper", "--json"});
    REQUIRE(js.code == 0);
    auto doc = json::parse(js.out);
    for (const auto& fx : doc) CHECK(fx["pass"] == true);
}

TEST_CASE("usage errors", "[cli]") {
    CHECK(run({"analyze"}).code == 1);          // missing --gens
    CHECK(run({"bogus"}).code == 1);            // unknown subcommand
    CHECK(run({}).code == 1);                   // no subcommand
    CHECK(run({"--help"}).code == 0);
}
