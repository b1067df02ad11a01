// Front-end layer: the field-expression grammar, position-annotated parse
// errors, report serialization, and end-to-end CLI behavior (exit codes,
// JSON schemas, deterministic output).  The CLI binary path comes from the
// SLCALC_CLI environment variable (set by CTest).

#include <slcalc/field_parse.hpp>
#include <slcalc/model_checks.hpp>
#include <slcalc/report.hpp>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

using namespace slcalc;
using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("SLCALC_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("field grammar basics", "[parser]") {
    CHECK(parse_field_expr("x1^2 + 2*r^2", 3).str() == "x1^2+2*r^2");
    CHECK(parse_field_expr("0", 2).is_zero());
    CHECK(parse_field_expr("1/2", 1).str() == "1/2");
    CHECK(parse_field_expr("-(x1 - x2)*x1", 2).str() == "x1*x2-x1^2");
    CHECK(parse_field_expr("log(r)*x1", 2).has_log_terms());
    CHECK(parse_field_expr("r*r*r", 1).str() == "r^3");
}

TEST_CASE("parse errors carry positions", "[parser]") {
    try {
        parse_field_expr("x1^(1/2)", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 4);
    }
    CHECK_THROWS_AS(parse_field_expr("x5", 2), ParseError); // beyond dimension
    CHECK_THROWS_AS(parse_field_expr("x1 +", 2), ParseError);
    CHECK_THROWS_AS(parse_field_expr("x1^-2", 2), ParseError);
    CHECK_THROWS_AS(parse_field_expr("log(x1)", 2), ParseError);
    CHECK_THROWS_AS(parse_field_expr("1/0", 2), ParseError);
}

TEST_CASE("parse/print round-trip on random fields", "[parser]") {
    std::mt19937_64 rng(2718);
    for (int t = 0; t < 50; ++t) {
        DensityField f = random_polynomial_field(rng, 2, Rational(0), 3, 2);
        DensityField back = parse_field_expr(f.str(), 2);
        CHECK(back == f);
        // printing the reparse is byte-stable
        CHECK(back.str() == f.str());
    }
}

TEST_CASE("report serialization is deterministic", "[report]") {
    Report rep;
    rep.add("b-case", "1", "1", "unit");
    rep.add("a-case", "2", "3", "unit");
    CHECK_FALSE(rep.passed());
    std::string j1 = emit_report(rep, ReportFormat::Json, true);
    std::string j2 = emit_report(rep, ReportFormat::Json, true);
    CHECK(j1 == j2);
    auto parsed = json::parse(j1);
    CHECK(parsed["status"] == "fail");
    REQUIRE(parsed["cases"].size() == 2);
    CHECK(parsed["cases"][0]["name"] == "a-case"); // sorted by name
    CHECK(parsed["cases"][0]["pass"] == false);
    // csv: header + one row per case, quotes escaped
    Report rq;
    rq.add("quote\"case", "x", "x", "unit");
    std::string csv = emit_report(rq, ReportFormat::Csv, true);
    CHECK(csv == "name,expected,got,provenance,pass\n"
                 "\"quote\"\"case\",\"x\",\"x\",\"unit\",true\n");
    // empty pass report
    Report empty;
    CHECK(emit_report(empty, ReportFormat::Json, true) == "{\"status\":\"pass\",\"cases\":[]}\n");
}

TEST_CASE("cli: series table schema", "[cli]") {
    auto r = run_cli("series --kind H --h0 2 --order 1");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["series"] == "H");
    CHECK(j["h0"] == "2");
    REQUIRE(j["coefficients"].size() == 2);
    CHECK(j["coefficients"][0]["value"] == "3/4");
    CHECK(j["coefficients"][1]["value"] == "-7/36");
}

TEST_CASE("cli: solve emits the expansion schema", "[cli]") {
    auto r = run_cli("solve --kind first --d 4 --w0 -1/4 --f0 \"x1^2\" --order 6");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["kind"] == "first");
    CHECK(j["w0"] == "-1/4");
    CHECK(j["residual_order"] == "inf");
    CHECK(j["terms"][0]["field"] == "x1^2");
    CHECK(j["terms"][0]["log"] == false);
}

TEST_CASE("cli: exit codes for parse and domain errors", "[cli]") {
    CHECK(run_cli("solve --kind first --d 4 --w0 0 --f0 \"x1^(1/2)\" --order 3").exit_code == 2);
    // exceptional weight -> domain error (3)
    auto r = run_cli("solve --kind first --d 4 --w0 -1/2 --f0 \"x1^2\" --order 5");
    CHECK(r.exit_code == 3);
    auto j = json::parse(r.out);
    CHECK(j["status"] == "error");
    CHECK(j["error"]["type"] == "domain");
    // unknown verb flag combinations are rejected by the option parser
    CHECK(run_cli("series --kind Z --order 2").exit_code == 3);
}

TEST_CASE("cli: algebra verb reduces operator words", "[cli]") {
    auto r = run_cli("algebra --word \"y K[h0]\" --order 8");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["zero"] == true);
    auto r2 = run_cli("algebra --word \"y x\"");
    auto j2 = json::parse(r2.out);
    CHECK(j2["zero"] == false);
    CHECK(j2["terms"].size() == 2);
}

TEST_CASE("cli: deterministic flag yields byte-identical reports", "[cli]") {
    auto a = run_cli("--deterministic verify --suite series");
    auto b = run_cli("--deterministic verify --suite series");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto j = json::parse(a.out);
    CHECK(j["status"] == "pass");
    CHECK_FALSE(j.contains("timing_ms"));
    // csv format
    auto c = run_cli("--deterministic --format csv verify --suite series");
    CHECK(c.out.rfind("name,expected,got,provenance,pass\n", 0) == 0);
}

TEST_CASE("cli: gjms and qcurv verbs", "[cli]") {
    auto r = run_cli("gjms --k 2 --d 3");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["c"] == "1");
    CHECK(j["consistent"] == true);
    auto q = run_cli("qcurv --n 2 --omega \"-x1^2\"");
    REQUIRE(q.exit_code == 0);
    CHECK(json::parse(q.out)["q"] == "-2");
}

TEST_CASE("cli: default order honors the environment variable", "[cli]") {
    auto r = run_cli("series --kind K --h0 generic");
    auto j = json::parse(r.out);
    CHECK(j["order"] == 10);
    const char* cli = std::getenv("SLCALC_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string("SLCALC_DEFAULT_ORDER=4 ") + cli +
                      " series --kind K --h0 generic 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    pclose(pipe);
    CHECK(json::parse(out)["order"] == 4);
}
