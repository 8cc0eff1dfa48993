#include <mzv_cli/cli.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "mzv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = mzv::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, ExpandShuffle) {
    Result r = run({"expand", "--product", "shuffle", "(2)", "(2)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2*xyxy + 4*xxyy\n");
    EXPECT_EQ(run({"expand", "--product", "stuffle", "(2)", "(2)"}).out, "2*xyxy + xxxy\n");
}

TEST(Cli, VerifyMembership) {
    Result r = run({"verify", "sum", "--k", "4", "--n", "2", "--mode", "member"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("MEMBER"), std::string::npos);
}

TEST(Cli, WeightAboveCapIsUsageError) {
    Result r = run({"rank", "--weight", "13"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("weight"), std::string::npos);
}

TEST(Cli, ParseErrorsExitTwo) {
    EXPECT_EQ(run({"expand", "(2"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"verify", "no-such-identity"}).code, 2);
    EXPECT_EQ(run({"verify", "sum", "--k", "4", "--n", "2", "--mode", "numeric", "--json", "--csv"}).code, 2);
}

TEST(Cli, EmptyModeFilterIsUsageError) {
    EXPECT_EQ(run({"verify", "guo-xie:ast", "--k", "5", "--n", "2", "--mode", "numeric"}).code, 2);
}

TEST(Cli, FailingCheckExitsOne) {
    // a tolerance no numeric check can meet
    Result r = run({"verify", "sum", "--k", "4", "--n", "2", "--mode", "numeric", "--tolerance", "1e-200"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, RankJsonSchema) {
    Result r = run({"--json", "rank", "--weight", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"weight", "families", "generators", "rank", "quotient_dim", "d_k", "match"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["quotient_dim"], 2);
    EXPECT_EQ(j["match"], true);
}

TEST(Cli, VerifyJsonSchema) {
    Result r = run({"verify", "sum", "--params", "k=4,n=2", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_FALSE(j["reports"].empty());
    for (const auto& rep : j["reports"])
        for (const char* key : {"name", "params", "kind", "verdict", "residue_or_delta"}) EXPECT_TRUE(rep.contains(key));
    EXPECT_FALSE(j["reports"][0].contains("millis"));
}

TEST(Cli, OutputIsDeterministic) {
    std::vector<std::string> args{"verify", "sigma-lemma", "--params", "k=6,n=2", "--threads", "3", "--json"};
    EXPECT_EQ(run(args).out, run(args).out);
    std::vector<std::string> table{"table", "--from", "2", "--to", "7", "--csv"};
    EXPECT_EQ(run(table).out, run(table).out);
}

TEST(Cli, OtherCommands) {
    EXPECT_EQ(run({"map", "--name", "S", "xyy"}).out, "xyy + xxy\n");
    Result reg = run({"reg", "yxy"});
    EXPECT_EQ(reg.code, 0);
    EXPECT_NE(reg.out.find("-2*xyy"), std::string::npos);
    Result ev = run({"eval", "(2)", "--digits", "20"});
    EXPECT_EQ(ev.out.substr(0, 12), "1.6449340668");
    Result cf = run({"eval", "--closed-form", "zeta2n", "--params", "n=2", "--digits", "20"});
    EXPECT_EQ(cf.code, 0);
    EXPECT_NE(cf.out.find("1/90"), std::string::npos);
    Result list = run({"list"});
    EXPECT_NE(list.out.find("guo-xie:ast"), std::string::npos);
    EXPECT_NE(list.out.find("generating:ohno_zagier"), std::string::npos);
    Result gen = run({"verify", "generating:kn_nk", "--k", "2", "--degree", "4"});
    EXPECT_EQ(gen.code, 0);
    EXPECT_EQ(run({"--help"}).code, 0);
}

} // namespace
