#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "klsf/cli.hpp"

using klsf::Int;
using klsf::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST(CliLambda, AllMethods) {
    const auto o = call({"lambda", "--group", "10", "--k", "3", "--l", "1", "--method", "all", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = json_of(o);
    EXPECT_EQ(j["schema"], "klsumfree/1");
    EXPECT_EQ(j["formula"]["value"], 2);
    EXPECT_EQ(j["bounds"]["lower"], 2);
    EXPECT_EQ(j["bounds"]["upper"], 5);
    EXPECT_EQ(j["exact"]["value"], 2);
}

TEST(CliLambda, ExactNonCyclic) {
    const auto o = call({"lambda", "--group", "2x4", "--k", "2", "--l", "1", "--method", "exact", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(json_of(o)["exact"]["value"], 4);
}

TEST(CliLambda, ExponentDividesDifference) {
    const auto o = call({"lambda", "--group", "4", "--k", "5", "--l", "1"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("v divides k-l"), std::string::npos);
    EXPECT_NE(o.out.find("formula: 0"), std::string::npos);
}

TEST(CliLambda, FormulaUnavailable) {
    const auto o = call({"lambda", "--group", "5x5", "--k", "3", "--l", "1", "--method", "formula"});
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("no closed form"), std::string::npos);
    const auto all = call({"lambda", "--group", "5x5", "--k", "3", "--l", "1"});
    EXPECT_EQ(all.code, 0);
    EXPECT_NE(all.out.find("unavailable"), std::string::npos);
}

TEST(CliLambda, ExactOverLimit) {
    EXPECT_EQ(call({"lambda", "--group", "41", "--k", "2", "--l", "1", "--method", "exact"}).code, 3);
    const auto all = call({"lambda", "--group", "41", "--k", "2", "--l", "1", "--json"});
    EXPECT_EQ(all.code, 0);
    EXPECT_TRUE(json_of(all)["exact"].is_null());
}

TEST(CliUsage, Errors) {
    EXPECT_EQ(call({"lambda", "--group", "2x3", "--k", "2", "--l", "1"}).code, 2);
    EXPECT_EQ(call({"lambda", "--group", "6", "--k", "1", "--l", "1"}).code, 2);
    EXPECT_EQ(call({"lambda", "--group", "6", "--k", "2"}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"verify", "--group", "8", "--k", "2", "--l", "1", "--set", "1,x"}).code, 2);
    EXPECT_EQ(call({"verify", "--group", "8", "--k", "2", "--l", "1", "--set", "9"}).code, 2);
    EXPECT_EQ(call({"lambda", "--group", "2x3", "--canonicalize", "--k", "2", "--l", "1"}).code, 0);
}

TEST(CliVerify, SumFree) {
    const auto o = call({"verify", "--group", "8", "--set", "1,3,5,7", "--k", "2", "--l", "1"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("is (2,1)-sum-free"), std::string::npos);
}

TEST(CliVerify, Violation) {
    const auto o = call({"verify", "--group", "5", "--set", "1,2", "--k", "3", "--l", "1"});
    EXPECT_EQ(o.code, 1);
    EXPECT_NE(o.out.find("violation:"), std::string::npos);
    const auto j = json_of(call({"verify", "--group", "5", "--set", "1,2", "--k", "3", "--l", "1", "--json"}));
    EXPECT_FALSE(j["sum_free"]);
    Int k_sum = 0, l_sum = 0;
    for (auto& x : j["violation"]["k_terms"]) k_sum += x.get<Int>();
    for (auto& x : j["violation"]["l_terms"]) l_sum += x.get<Int>();
    EXPECT_EQ(k_sum % 5, l_sum % 5);
    EXPECT_EQ(j["violation"]["k_terms"].size(), 3u);
}

TEST(CliVerify, Coordinates) {
    const auto o = call({"verify", "--group", "2x4", "--set", "0:1,1:1,0:3,1:3", "--k", "2", "--l", "1", "--json"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(json_of(o)["set"], nlohmann::json::parse("[[0,1],[0,3],[1,1],[1,3]]"));
}

TEST(CliWitness, Json) {
    const auto o = call({"witness", "--group", "10", "--k", "3", "--l", "1", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = json_of(o);
    EXPECT_EQ(j["size"], 2);
    EXPECT_EQ(j["members"].size(), 2u);
    EXPECT_EQ(j["construction"]["kind"], "interval");
    EXPECT_TRUE(j["construction"]["certificate"].is_object());
}

TEST(CliAlpha, Exact) {
    const auto o = call({"alpha", "--n", "10", "--k", "3", "--l", "1", "--exact", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = json_of(o);
    EXPECT_EQ(j["case"], "intermediate");
    EXPECT_EQ(j["exact"]["alpha"]["value"], 2);
    EXPECT_EQ(j["alpha"]["lower"], 2);
    EXPECT_EQ(j["alpha"]["upper"], 3);
}

TEST(CliCount, Z7) {
    const auto o = call({"count", "--group", "7", "--k", "2", "--l", "1", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = json_of(o);
    EXPECT_GE(j["total"].get<Int>(), 4);
    EXPECT_EQ(j["by_size"]["0"], 1);
    EXPECT_EQ(call({"count", "--group", "29", "--k", "2", "--l", "1"}).code, 3);
}

TEST(CliEnumerate, Z3) {
    const auto o = call({"enumerate", "--group", "3", "--k", "2", "--l", "1", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(json_of(o)["sets"], nlohmann::json::parse("[[1],[2]]"));
}

TEST(CliScan, Cyclic31FormulaVsExact) {
    const auto o = call({"scan", "--n", "2..36", "--k", "3", "--l", "1", "--check", "formula-vs-exact", "--format",
                         "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = json_of(o);
    EXPECT_EQ(j["rows"].size(), 35u);
    EXPECT_EQ(j["summary"]["disagreements"], 0);
}

TEST(CliScan, GreenRuzsaFamily) {
    const auto o = call({"scan", "--family", "all-abelian", "--order", "2..16", "--k", "2", "--l", "1", "--check",
                         "green-ruzsa"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("disagreements=0"), std::string::npos);
    EXPECT_EQ(o.out.rfind("group,k,l,formula_value,lower,upper,exact,witness_size,agree", 0), 0u);
}

TEST(CliScan, BoundsCsv) {
    const auto o = call({"scan", "--n", "2..24", "--k", "4", "--l", "2", "--check", "bounds"});
    ASSERT_EQ(o.code, 0) << o.err;
    std::istringstream lines(o.out);
    std::string line;
    int rows = 0;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
        if (line.starts_with("#")) continue;
        ++rows;
        EXPECT_TRUE(line.ends_with(",true")) << line;
    }
    EXPECT_EQ(rows, 23);
}

TEST(CliScan, ErrorRowsAreMarked) {
    setenv("KLSF_LIMIT_EXACT", "10", 1);
    const auto o = call({"scan", "--n", "9..12", "--k", "2", "--l", "1", "--check", "bounds"});
    unsetenv("KLSF_LIMIT_EXACT");
    EXPECT_EQ(o.code, 3);
    EXPECT_NE(o.out.find("# error 11"), std::string::npos);
    EXPECT_NE(o.out.find("errors=2"), std::string::npos);
}

TEST(CliDeterminism, JsonIsByteIdentical) {
    const std::vector<std::string> args{"lambda", "--group", "24", "--k", "3", "--l", "2", "--json"};
    EXPECT_EQ(call(args).out, call(args).out);
    const std::vector<std::string> scan{"scan", "--n", "2..20", "--k", "4", "--l", "1", "--format", "json"};
    EXPECT_EQ(call(scan).out, call(scan).out);
}
