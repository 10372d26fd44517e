#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "knoedel/cli.hpp"
#include "knoedel/rational.hpp"

using namespace knoedel;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("table csv") {
    const auto r = run({"table", "--model", "double-large", "--steps", "3"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(rows[0] == std::vector<std::string>{"model", "step", "state", "num", "den", "decimal"});
    bool found = false;
    for (const auto& row : rows) {
        if (row[1] == "3" && row[2] == "0") {
            CHECK(row[3] == "16");
            CHECK(row[4] == "27");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("table with zero steps") {
    const auto r = run({"table", "--model", "double-small", "--steps", "0"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "model,step,state,num,den,decimal\ndouble-small,0,0,1,1,1\n");
}

TEST_CASE("table json round-trips the csv values") {
    const auto csv = run({"table", "--model", "double-small", "--steps", "8"});
    const auto js = run({"table", "--model", "double-small", "--steps", "8", "--format", "json"});
    REQUIRE(js.code == 0);
    const auto records = json::parse(js.out);
    const auto rows = parse_csv(csv.out);
    REQUIRE(records.size() + 1 == rows.size());
    ExactRational step8_total;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        const auto& row = rows[i + 1];
        const std::string state = rec["state"].is_string() ? rec["state"].get<std::string>()
                                                            : std::to_string(rec["state"].get<int>());
        CHECK(state == row[2]);
        const auto value = ExactRational::parse(rec["value"].get<std::string>());
        CHECK(value == ExactRational::parse(row[3] + "/" + row[4]));
        CHECK(rec["source"] == "dp");
        if (rec["step"] == 8) step8_total += value;
    }
    CHECK(step8_total == ExactRational(1));
}

TEST_CASE("beta is serialized as a token") {
    const auto r = run({"table", "--model", "double-large", "--steps", "1", "--format", "json"});
    const auto records = json::parse(r.out);
    CHECK(records[2]["state"] == "beta");
    CHECK(records[2]["value"] == "2/3");
}

TEST_CASE("coeff") {
    auto r = run({"coeff", "--model", "double-large", "--state", "beta", "--steps", "4", "--source", "closed-form"});
    REQUIRE(r.code == 0);
    CHECK(parse_csv(r.out)[1][3] == "32");
    CHECK(parse_csv(r.out)[1][4] == "81");

    r = run({"coeff", "--model", "double-large", "--state", "0", "--steps", "1", "--source", "dp"});
    REQUIRE(r.code == 0);
    const auto row = parse_csv(r.out)[1];
    CHECK(row[3] == "0");
    CHECK(row[4] == "1");
    CHECK(row[7].find("unreachable") != std::string::npos);

    r = run({"coeff", "--model", "double-small", "--state", "0", "--steps", "3", "--source", "closed-form", "--format",
             "json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["value"] == "5/9");
    CHECK(json::parse(r.out)["source"] == "closed-form");
}

TEST_CASE("coeff sources agree") {
    for (int steps = 0; steps <= 15; ++steps) {
        for (const std::string state : {"0", "1", "2", "5", "beta"}) {
            for (const std::string model : {"double-large", "double-small"}) {
                const auto dp = run({"coeff", "--model", model, "--state", state, "--steps", std::to_string(steps)});
                const auto cf = run({"coeff", "--model", model, "--state", state, "--steps", std::to_string(steps),
                                     "--source", "closed-form"});
                REQUIRE(dp.code == 0);
                REQUIRE(cf.code == 0);
                CHECK(parse_csv(dp.out)[1][3] == parse_csv(cf.out)[1][3]);
                CHECK(parse_csv(dp.out)[1][4] == parse_csv(cf.out)[1][4]);
            }
        }
    }
}

TEST_CASE("closed forms reject unbalanced probabilities") {
    const auto r = run({"coeff", "--model", "double-large", "--state", "0", "--steps", "3", "--p", "1/2", "--source",
                        "closed-form"});
    CHECK(r.code == cli::kUsageError);
    CHECK(r.err.find("closed forms require the balanced probabilities") != std::string::npos);
    // the DP accepts them
    const auto dp = run({"coeff", "--model", "double-large", "--state", "0", "--steps", "3", "--p", "1/2"});
    CHECK(dp.code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"bogus"}).code == cli::kUsageError);
    CHECK(run({"table", "--model", "triple", "--steps", "3"}).code == cli::kUsageError);
    CHECK(run({"table", "--model", "double-large", "--steps", "x"}).code == cli::kUsageError);
    CHECK(run({"table", "--model", "double-large", "--steps", "3", "--format", "xml"}).code == cli::kUsageError);
    CHECK(run({"coeff", "--model", "double-large", "--state", "q", "--steps", "3"}).code == cli::kUsageError);
    CHECK(run({"series", "--which", "h", "--order", "3"}).code == cli::kUsageError);
    CHECK(run({"series", "--which", "t", "--order", "201"}).code == cli::kUsageError);
    CHECK(run({"simulate", "--model", "double-large", "--steps", "3", "--trials", "0"}).code == cli::kUsageError);
    CHECK(run({"table", "--model", "double-large", "--steps", "3", "--p", "3/2"}).code == cli::kUsageError);
    CHECK(run({"table", "--help"}).code == 0);
}

TEST_CASE("step cap and its environment override") {
    CHECK(run({"table", "--model", "double-small", "--steps", "201"}).code == cli::kUsageError);
    ::setenv("KNOEDEL_MAX_STEPS", "5", 1);
    CHECK(cli::max_steps_cap() == 5);
    CHECK(run({"table", "--model", "double-small", "--steps", "6"}).code == cli::kUsageError);
    ::setenv("KNOEDEL_MAX_STEPS", "250", 1);
    CHECK(run({"table", "--model", "double-small", "--steps", "201"}).code == 0);
    ::unsetenv("KNOEDEL_MAX_STEPS");
    CHECK(cli::max_steps_cap() == cli::kDefaultMaxSteps);
}

TEST_CASE("series") {
    auto r = run({"series", "--which", "t", "--order", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "series,k,num,den,decimal\nt,0,0,1,0\nt,1,4,27,0.148148148148\n");

    r = run({"series", "--which", "f0", "--order", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["coefficients"] == json::array({"1/1", "16/27"}));

    r = run({"series", "--which", "u1", "--order", "1", "--format", "json"});
    CHECK(json::parse(r.out)["coefficients"] == json::array({"2/3"}));
    r = run({"series", "--which", "inv1mt", "--order", "2", "--format", "json"});
    CHECK(json::parse(r.out)["coefficients"] == json::array({"1/1", "4/27"}));
    r = run({"series", "--which", "g0", "--order", "2", "--format", "json"});
    CHECK(json::parse(r.out)["coefficients"] == json::array({"1/1", "5/9"}));
}

TEST_CASE("verify exit codes") {
    auto r = run({"verify", "--order", "5", "--max-steps", "9"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("all 10 suites passed") != std::string::npos);

    r = run({"verify", "--order", "5", "--max-steps", "9", "--inject-fault"});
    CHECK(r.code == cli::kVerificationFailed);
    CHECK(r.out.find("[FAIL] double-large closed forms vs DP") != std::string::npos);
}

TEST_CASE("simulate") {
    const std::vector<std::string> args = {"simulate", "--model", "double-large", "--steps", "3", "--trials", "200000",
                                           "--seed", "17"};
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto rows = parse_csv(a.out);
    CHECK(rows[0].back() == "within");
    CHECK(rows[1][2] == "0");
    CHECK(rows[1][6] == "16");
    CHECK(rows[1][7] == "27");
    CHECK(rows[1][11] == "yes");

    auto threads = args;
    threads.insert(threads.end(), {"--threads", "3"});
    CHECK(run(threads).out == a.out);

    const auto zero = run({"simulate", "--model", "double-small", "--steps", "0", "--trials", "10", "--format", "json"});
    const auto recs = json::parse(zero.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["count"] == 10);
    CHECK(recs[0]["deviation"] == 0.0);
    CHECK(recs[0]["source"] == "monte-carlo");
}
