#include <gtest/gtest.h>

#include <sstream>

#include "g3af_cli/run.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

std::string data(const std::string& name) { return std::string(G3AF_TEST_DATA) + "/" + name; }

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = g3af::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, ExtensionsOfTheTwoCycle) {
    const auto r = call({"extensions", data("two_cycle.af")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("3 labelling(s)"), std::string::npos);
    EXPECT_NE(r.out.find("a:und b:und"), std::string::npos);
    const auto st = call({"extensions", data("two_cycle.af"), "--semantics", "stable"});
    EXPECT_NE(st.out.find("2 labelling(s)"), std::string::npos);
}

TEST(Cli, Validity) {
    EXPECT_EQ(call({"valid", "(x -> y) | (y -> x)"}).out, "VALID\n");
    const auto r = call({"valid", "x | ~x"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("INVALID"), std::string::npos);
    EXPECT_NE(r.out.find("x=(f,t)"), std::string::npos);
}

TEST(Cli, VerifyReportsMatch) {
    const auto r = call({"verify", data("fig5_base.af"), "--theorem", "thm2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("MATCH"), std::string::npos);
}

TEST(Cli, JsonIsStable) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--format", "json", "extensions", data("fig5_base.af")},
             {"--format", "json", "solve-higher", data("fig4.af"), "--scope", "declared"},
             {"--format", "json", "aaf", data("aaf_two.af")},
             {"--format", "json", "translate", data("two_cycle.af"), "--mode", "theta"}}) {
        const auto a = call(args);
        const auto b = call(args);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.out.front(), '{');
    }
}

TEST(Cli, ParseErrorsNameTheFact) {
    const auto r = call({"extensions", data("undeclared.af")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("undeclared.af:2:1"), std::string::npos);
    EXPECT_NE(r.err.find("att fact"), std::string::npos);
    const auto mixed = call({"extensions", data("mixed.af")});
    EXPECT_EQ(mixed.code, 1);
    EXPECT_NE(mixed.err.find("mixes"), std::string::npos);
    EXPECT_EQ(call({"extensions", data("missing.af")}).code, 1);
}

TEST(Cli, WrongCommandForSpecies) {
    const auto r = call({"extensions", data("conj.af")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("conjunctive"), std::string::npos);
}

TEST(Cli, GuardExitsWithThree) {
    const auto r = call({"solve-higher", data("big_higher.af")});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("--max-unknowns"), std::string::npos);
    EXPECT_EQ(call({"solve-higher", data("big_higher.af"), "--pin-r"}).code, 0);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({"extensions", "--bogus", data("two_cycle.af")}).code, 1);
    EXPECT_EQ(call({"translate", data("two_cycle.af"), "--mode", "nope"}).code, 1);
    EXPECT_EQ(call({}).code, 1);
}

TEST(Cli, EncodeProjectsAdfs) {
    const auto r = call({"encode", data("adf_fig12.af"), "--project"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("MATCH"), std::string::npos);
}

}  // namespace
