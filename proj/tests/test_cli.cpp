#include <gtest/gtest.h>

#include <sstream>

#include "hurwitz/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = hurwitz::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, HurwitzText) {
    auto r = run({"hurwitz", "--genus", "0", "--degree", "3", "--profiles", "(2,1);(2,1);(3)"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1 (2h-2 = -2)\n");

    r = run({"hurwitz", "--genus", "0", "--degree", "3", "--profiles", "(2,1)"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "0 (2h-2 undefined: parity failure)\n");

    r = run({"hurwitz", "--genus", "1", "--degree", "2", "--oracle"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "2 (2h-2 = 0)\n");
}

TEST(Cli, HurwitzJson) {
    auto r = run({"hurwitz", "--genus", "0", "--degree", "2", "--profiles", "(1,1);(2);(2)", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = hurwitz::Json::parse(r.out);
    EXPECT_EQ(j["value"], "1/2");
    EXPECT_EQ(j["euler2h2"], -2);
    EXPECT_EQ(j["method"], "character");
}

TEST(Cli, CutjoinShow) {
    auto r = run({"cutjoin", "show", "--degree", "2", "--partition", "(2)"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1/2 z^2 p_2 d^2/dp_1dp_1 + p_1^2 d/dp_2\n");

    r = run({"cutjoin", "show", "--degree", "2", "--partition", "(2)", "--normalized"});
    EXPECT_EQ(r.out, "1/2 z p_2 d^2/dp_1dp_1 + z^-1 p_1^2 d/dp_2\n");

    r = run({"cutjoin", "show", "--degree", "2", "--partition", "(2)", "--z", "1"});
    EXPECT_EQ(r.out, "p_1^2 d/dp_2 + 1/2 p_2 d^2/dp_1dp_1\n");

    r = run({"cutjoin", "show", "--degree", "3", "--partition", "(2,1)", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = hurwitz::Json::parse(r.out);
    EXPECT_EQ(j["terms"].size(), 4u);
    EXPECT_TRUE(j["z"].is_null());
}

TEST(Cli, CutjoinConstantsAndVerify) {
    auto r = run({"cutjoin", "constants", "--degree", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("C^(3)_(2,1)(2,1) = 3"), std::string::npos) << r.out;
    auto oracle = run({"cutjoin", "constants", "--degree", "3", "--oracle"});
    EXPECT_EQ(oracle.out, r.out);

    r = run({"cutjoin", "verify", "--degree", "3"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, Genfun) {
    auto r = run({"genfun", "--degree", "2", "--marks", "(2)", "--order", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1/2*z^-4*p_(1,1) + 1/2*u*z^-2*p_(2) + 1/4*u^2*z^-2*p_(1,1) + 1/12*u^3*p_(2)\n");

    r = run({"genfun", "--degree", "3", "--marks", "(2,1);(3)", "--order", "2", "--double", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = hurwitz::Json::parse(r.out);
    EXPECT_EQ(j["marks"].size(), 2u);
    EXPECT_EQ(j["marks"][1]["label"], "u2");
    EXPECT_TRUE(j["double"].get<bool>());
    auto series = hurwitz::series_from_json(j);
    EXPECT_EQ(hurwitz::to_json(series), j);
}

TEST(Cli, VerifyReport) {
    auto r = run({"verify", "--degree", "3"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);

    r = run({"verify", "--degree", "2", "--format", "json"});
    auto j = hurwitz::Json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, VerifySkipsOverBudget) {
    auto r = run({"verify", "--degree", "2", "--budget", "1"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("SKIPPED"), std::string::npos) << r.out;
}

TEST(Cli, CharTable) {
    auto r = run({"char-table", "--degree", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = hurwitz::Json::parse(r.out);
    EXPECT_EQ(j["rows"][1]["values"], hurwitz::Json({-1, 0, 2}));
    r = run({"char-table", "--degree", "2"});
    EXPECT_EQ(r.out, "         (2)  (1,1)\n  (2)      1      1\n(1,1)     -1      1\n");
}

TEST(Cli, UsageErrorsExitTwo) {
    auto r = run({"hurwitz", "--degree", "3"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--genus"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("usage"), std::string::npos);

    EXPECT_EQ(run({"hurwitz", "--genus", "0", "--degree", "3", "--bogus"}).code, 2);
    EXPECT_EQ(run({"hurwitz", "--genus", "0", "--degree", "3", "--profiles", "(2,0)"}).code, 2);
    EXPECT_EQ(run({"genfun", "--degree", "2", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, ComputationErrorsExitOne) {
    auto r = run({"hurwitz", "--genus", "0", "--degree", "3", "--profiles", "(2)"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("error:"), std::string::npos);

    r = run({"hurwitz", "--genus", "1", "--degree", "5", "--profiles", "(2,1,1,1);(5)", "--oracle", "--budget", "10"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("budget"), std::string::npos) << r.err;

    EXPECT_EQ(run({"char-table", "--degree", "12"}).code, 1);
}

TEST(Cli, Version) {
    auto r = run({"--version"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "genhur 0.1.0 (format 1)\n");
}

TEST(Cli, ParseProfiles) {
    auto p = hurwitz::cli::parse_profiles(" (2,1) ; (3)");
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[1], hurwitz::Partition({3}));
    EXPECT_TRUE(hurwitz::cli::parse_profiles("").empty());
    EXPECT_THROW(hurwitz::cli::parse_profiles("(2);;(1)"), hurwitz::ParseError);
}
