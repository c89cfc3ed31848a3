#include <gradim/cli.hpp>

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = gradim::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("triangle reproduces the n = 6 table") {
    const auto r = run({"triangle", "--n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 219 3292 7723 3292 219 1 | 14747") != std::string::npos);
    CHECK(r.out.find("1 5 1 | 7") != std::string::npos);
}

TEST_CASE("triangle n = 0") {
    const auto r = run({"triangle", "--n", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 | 1\n");
}

TEST_CASE("deterministic output") {
    const auto a = run({"triangle", "--n", "8", "--format", "json"});
    const auto b = run({"triangle", "--n", "8", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto c = run({"fj", "--j", "3", "--format", "json"});
    const auto d = run({"fj", "--j", "3", "--format", "json"});
    CHECK(c.out == d.out);
}

TEST_CASE("json output round-trips") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"triangle", "--n", "5", "--format", "json"},
             {"sigma", "--n", "12", "--format", "json"},
             {"fj", "--j", "2", "--format", "json"},
             {"coeff", "--s", "1", "--t", "2", "--k", "1", "--format", "json"},
             {"conjecture", "--k", "0", "--format", "json"}}) {
        const auto r = run(args);
        REQUIRE(r.code == 0);
        const auto parsed = nlohmann::json::parse(r.out);
        CHECK(nlohmann::json::parse(parsed.dump(2)) == parsed);
        CHECK(parsed.contains("command"));
        CHECK(parsed.contains("parameters"));
    }
}

TEST_CASE("fj plain output lists exact coefficients") {
    const auto r0 = run({"fj", "--j", "0"});
    CHECK(r0.code == 0);
    CHECK(r0.out == "freq 0: -1 -1\nfreq 1: 1\n");
    const auto r1 = run({"fj", "--j", "1"});
    CHECK(r1.out == "freq 1: -2 -2 -1/2\nfreq 2: 2\n");
}

TEST_CASE("fj json uses num/den pairs") {
    const auto r = run({"fj", "--j", "1", "--format", "json"});
    const auto parsed = nlohmann::json::parse(r.out);
    REQUIRE(parsed["terms"].size() == 2);
    CHECK(parsed["terms"][0]["freq"] == 1);
    CHECK(parsed["terms"][0]["poly"][2]["num"] == "-1");
    CHECK(parsed["terms"][0]["poly"][2]["den"] == "2");
    CHECK(parsed["terms"][1]["freq"] == 2);
    CHECK(parsed["terms"][1]["poly"][0]["num"] == "2");
}

TEST_CASE("coeff matches table-derived values") {
    const auto r = run({"coeff", "--s", "1", "--t", "2", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("delta(1,2) = -20") != std::string::npos);
    CHECK(r.out.find("MATCH") != std::string::npos);

    const auto r2 = run({"coeff", "--s", "0", "--t", "1"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("gamma(0,1) = 1") != std::string::npos);
    CHECK(r2.out.find("MATCH") != std::string::npos);

    const auto r3 = run({"coeff", "--s", "3", "--t", "3", "--k", "0"});
    CHECK(r3.code == 0);
    CHECK(r3.out.find("gamma(3,3) = -6561/32") != std::string::npos);
    CHECK(r3.out.find("MATCH") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"triangle"}).code == 2);                                // missing --n
    CHECK(run({"triangle", "--n", "-3"}).code == 2);                   // negative
    CHECK(run({"nonsense"}).code == 2);                                // unknown command
    CHECK(run({"coeff", "--s", "1", "--t", "0", "--k", "1"}).code == 2); // out of domain
    CHECK(run({"coeff", "--s", "1", "--t", "1", "--k", "5"}).code == 2); // no such level
    CHECK(run({"asymptotics", "--n", "5"}).code == 2);                 // below minimum
    CHECK(run({"verify", "--suite", "bogus"}).code == 2);              // unknown suite
    CHECK(run({"triangle", "--n", "4", "--format", "xml"}).code == 2); // unknown format
}

TEST_CASE("sigma command") {
    const auto r = run({"sigma", "--n", "6", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n,sigma") != std::string::npos);
    CHECK(r.out.find("6,14747") != std::string::npos);
    CHECK(run({"sigma", "--n", "0"}).out == "0 1\n");
}

TEST_CASE("help exits 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("triangle") != std::string::npos);
}

TEST_CASE("asymptotics command reports ratios and the radius diagnostic") {
    const auto r = run({"asymptotics", "--n", "60", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n,sigma,estimate,ratio") != std::string::npos);
    CHECK(r.out.find("growth_rate_diagnostic") != std::string::npos);
    CHECK(r.err.find("computing") != std::string::npos); // progress on stderr only
}

TEST_CASE("asymptotics small-n smoke") {
    const auto r = run({"asymptotics", "--n", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n=10 sigma=352080111 ") != std::string::npos);
    CHECK(r.out.find("growth-rate diagnostic") != std::string::npos);
}

TEST_CASE("fj leading constant agrees with the coeff command") {
    const auto fj = run({"fj", "--j", "4", "--format", "json"});
    REQUIRE(fj.code == 0);
    const auto parsed = nlohmann::json::parse(fj.out);
    const auto& terms = parsed["terms"];
    const auto& top = terms[terms.size() - 1];
    REQUIRE(top["freq"] == 5);
    // gamma(0,5) = 5^8/5! = 78125/24
    CHECK(top["poly"].size() == 1);
    CHECK(top["poly"][0]["num"] == "78125");
    CHECK(top["poly"][0]["den"] == "24");
    const auto coeff = run({"coeff", "--s", "0", "--t", "5"});
    CHECK(coeff.out.find("gamma(0,5) = 78125/24") != std::string::npos);
    CHECK(coeff.out.find("MATCH") != std::string::npos);
}

TEST_CASE("conjecture command") {
    const auto r = run({"conjecture", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("consistent on held-out points: true") != std::string::npos);
    const auto r2 = run({"conjecture", "--k", "2"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("consistent on held-out points: false") != std::string::npos);
    CHECK(r2.out.find("first mismatch") != std::string::npos);
}

TEST_CASE("verify exits 0 on every suite") {
    const auto tables = run({"verify", "--suite", "tables"});
    CHECK(tables.code == 0);
    CHECK(tables.out.find("PASS table1-triangle") != std::string::npos);
    CHECK(tables.out.find("PASS table2-closed-forms") != std::string::npos);
    CHECK(run({"verify", "--suite", "identities"}).code == 0);
    CHECK(run({"verify", "--suite", "formulas"}).code == 0);
    CHECK(run({"verify", "--suite", "asymptotics"}).code == 0);
    const auto all = run({"verify", "--suite", "all"});
    CHECK(all.code == 0);
    CHECK(all.out.find("all checks passed (14 checks)") != std::string::npos);
}
