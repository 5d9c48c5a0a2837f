#include <sstream>

#include "doctest.h"

#include "nsg/cli.hpp"
#include "nsg/report_json.hpp"

using namespace nsg;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("analyze reports the Goto vector") {
    const RunResult r = run_cli({"analyze", "4,5,7", "--format", "json"});
    REQUIRE(r.code == 0);
    const SemigroupReport rep = report_from_json(r.out);
    CHECK(rep.goto_vector == std::vector<Int>{1, 2, 2, 2});
    CHECK(rep.tau == 1);
    CHECK(rep.rho == 2);
    CHECK(rep.t_set == std::vector<Int>{3, 6});
    CHECK(rep.m_additive);
    CHECK_FALSE(rep.symmetric);
}

TEST_CASE("json round-trips byte for byte") {
    for (const char* gens : {"4,5,7", "5,6,14", "10,17,35"}) {
        const RunResult r = run_cli({"analyze", gens, "--format", "json"});
        REQUIRE(r.code == 0);
        const SemigroupReport rep = report_from_json(r.out);
        CHECK(to_json(rep) == r.out);
    }
}

TEST_CASE("unknown report keys are rejected") {
    const RunResult r = run_cli({"analyze", "4,5,7", "--format", "json"});
    std::string doctored = r.out;
    doctored.insert(doctored.rfind('}'), ",\n  \"extra\": 1\n");
    CHECK_THROWS_AS(report_from_json(doctored), InvalidArgument);
    CHECK_THROWS_AS(report_from_json("{}"), InvalidArgument);
}

TEST_CASE("text and json agree") {
    const RunResult text = run_cli({"analyze", "5,6,14"});
    REQUIRE(text.code == 0);
    const RunResult json = run_cli({"analyze", "5,6,14", "--format", "json"});
    const SemigroupReport rep = report_from_json(json.out);
    CHECK(text.out.find("delta = " + std::to_string(rep.delta)) != std::string::npos);
    CHECK(text.out.find("tau = " + std::to_string(rep.tau)) != std::string::npos);
    CHECK(text.out.find("r = " + std::to_string(rep.reduction_number)) != std::string::npos);
    CHECK(rep.delta == 1);
    CHECK(rep.tau == 2);
    CHECK(rep.g_a1 == 3);
    CHECK(rep.reduction_number == 4);
}

TEST_CASE("goto subcommand") {
    const RunResult r = run_cli({"goto", "5,6,9", "--element", "14"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("g(14) = 3") != std::string::npos);

    const RunResult with_oracle =
        run_cli({"goto", "4,5,7", "--element", "4", "--oracle", "--format", "json"});
    REQUIRE(with_oracle.code == 0);
    CHECK(with_oracle.out.find("\"goto_number\": 2") != std::string::npos);
    CHECK(with_oracle.out.find("\"oracle\": 2") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    const RunResult r = run_cli({"verify", "--property", "theorem_except",
                                 "--max-multiplicity", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("<5,6,9>") != std::string::npos);
    CHECK(r.out.find("<6,7,10,11>") != std::string::npos);

    const RunResult listing = run_cli({"verify", "--list"});
    CHECK(listing.code == 0);
    CHECK(listing.out.find("goto_differential") != std::string::npos);

    const RunResult unknown = run_cli({"verify", "--property", "nope"});
    CHECK(unknown.code == 2);
}

TEST_CASE("enumerate subcommand") {
    const RunResult r = run_cli({"enumerate", "--genus-max", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "1\n2,3\n3,4,5\n2,5\n");

    const RunResult csv = run_cli({"enumerate", "--genus-max", "1", "--format", "csv"});
    CHECK(csv.out.find("generators,multiplicity") != std::string::npos);
    CHECK(csv.out.find("\"2,3\",2,2,1,1") != std::string::npos);

    const RunResult json = run_cli({"enumerate", "--genus-max", "1", "--format", "json"});
    CHECK(json.out.find("[2,3]") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"analyze"}).code == 2);
    CHECK(run_cli({"analyze", "4,x"}).code == 2);
    CHECK(run_cli({"analyze", ""}).code == 2);
    CHECK(run_cli({"analyze", "4,5,7", "--format", "csv"}).code == 2);
    CHECK(run_cli({"analyze", "2,4"}).code == 3);        // NotNumerical
    CHECK(run_cli({"analyze", "1"}).code == 3);          // RequiresProperSemigroup
    CHECK(run_cli({"goto", "4,5,7", "--element", "6"}).code == 3); // NotAMember
    CHECK(run_cli({"enumerate", "--genus-max", "64"}).code == 2);  // InvalidSpec
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("table limit is a loud failure") {
    // (a_1 - 1)(a_2 - 1) is far above the default table cap.
    const RunResult r = run_cli({"analyze", "2,40000001"});
    CHECK(r.code == 3);
    CHECK(r.err.find("NSG_TABLE_LIMIT") != std::string::npos);
}

TEST_SUITE_END();
