#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = pptor::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    Outcome r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, DocumentedExamples) {
    Outcome low = run({"low", "E y. x = 2*y"});
    EXPECT_EQ(low.code, 0);
    EXPECT_EQ(low.out, "false\n");
    Outcome stable = run({"card", "stable", "beth(ω)"});
    EXPECT_EQ(stable.code, 0);
    EXPECT_EQ(stable.out, "false (König)\n");
    Outcome limit = run({"limit-model", "lambda", "--cof", "w1"});
    EXPECT_EQ(limit.code, 0);
    EXPECT_EQ(limit.out, "t(Π_p PE(⊕_n Z(p^n)^(λ))) ⊕ ⊕_p Z(p^∞)^(λ)\n");
    EXPECT_NE(limit.err.find("warning"), std::string::npos);
}

TEST(Cli, Subcommands) {
    EXPECT_EQ(run({"low", "2*x = 0"}).out, "true\n");
    EXPECT_EQ(run({"eval", "E y . x = 2*y", "Z/4 + Z/2"}).out, "<(2,0)> (order 2)\n");
    EXPECT_EQ(run({"pure", "<(1,1)>", "Z/4 + Z/2"}).out, "true\n");
    EXPECT_EQ(run({"pure", "<(2)>", "Z/4"}).out.substr(0, 6), "false\n");
    EXPECT_EQ(run({"torsion", "Z/6 + Z^2"}).out, "<(1,0,0)> (order 6)\n");
    EXPECT_EQ(run({"complement", "<(2)>", "Z/4"}).out, "none\n");
    Outcome k = run({"complement", "<(1,1)>", "Z/4 + Z/2"});
    EXPECT_EQ(k.code, 0);
    EXPECT_EQ(k.out.back(), '\n');
    EXPECT_NE(k.out.find("(order 2)"), std::string::npos);
    EXPECT_EQ(run({"types", "0", "--bound", "4"}).out, "5\n");
    EXPECT_EQ(run({"ulm", "(Z/4)^3 + Z/2"}).out, "alpha(2,1)=1 alpha(2,2)=3\n");
    EXPECT_EQ(run({"card", "compare", "aleph0", "<", "2^aleph0"}).out, "true (Cantor)\n");
    EXPECT_EQ(run({"--ascii", "card", "normalize", "aleph2^aleph0"}).out, "aleph2 + 2^aleph0\n");
    EXPECT_EQ(run({"card", "cof", "beth(w)"}).out, "ℵ0\n");
    EXPECT_EQ(run({"card", "stable", "aleph1"}).out, "unknown\n");
    EXPECT_EQ(run({"--ascii", "limit-model", "2^aleph0", "--cof", "w", "--p", "2"}).out,
              "t(PE(Sum_n(Z(2^n)^(2^aleph0))))^(aleph0) + Z(2^inf)^(2^aleph0)\n");
}

TEST(Cli, WitnessChain) {
    Outcome r = run({"chain", "--witness", "2", "3", "1", "--indices"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "group: Z/2 + Z/4 + Z/8\nlow head: true\norders: 8 4 2 1 1\nstabilizes at: 3\nindices: 2 2 2 1\n");
    Outcome t = run({"chain", "E y . x = 2^{n}*y", "Z/8", "--levels", "4"});
    EXPECT_EQ(t.out, "group: Z/8\nlow head: false\norders: 8 4 2 1 1\nstabilizes at: 3\n");
}

TEST(Cli, ExitCodes) {
    Outcome parse = run({"low", "E y. x = 2*"});
    EXPECT_EQ(parse.code, 2);
    EXPECT_NE(parse.err.find("<end of input>"), std::string::npos);
    Outcome group = run({"torsion", "Z/4 + + Z"});
    EXPECT_EQ(group.code, 2);
    EXPECT_NE(group.err.find("'+'"), std::string::npos);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"limit-model", "lambda", "--cof", "w2"}).code, 2);
    EXPECT_EQ(run({"card", "compare", "1", "<>", "2"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
    EXPECT_EQ(run({"ulm", "Z"}).code, 1);
    EXPECT_EQ(run({"card", "stable", "5"}).code, 1);
    EXPECT_EQ(run({"limit-model", "beth(w)", "--cof", "w1"}).code, 1);
    EXPECT_EQ(run({"pure", "<(1,1,1)>", "Z/4"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, JsonAgreesWithPlainOutput) {
    auto low = json_of({"low", "E y. x = 2*y"});
    EXPECT_EQ(low["command"], "low");
    EXPECT_EQ(low["input"]["formula"], "E y. x = 2*y");
    EXPECT_EQ(low["result"]["low"], false);
    EXPECT_EQ(low["result"]["generator"], "2");
    EXPECT_FALSE(low.contains("trace"));

    auto stable = json_of({"card", "stable", "beth(ω)"});
    EXPECT_EQ(stable["command"], "card stable");
    EXPECT_EQ(stable["result"]["value"], "false");
    EXPECT_EQ(stable["result"]["rule"], "König");
    ASSERT_TRUE(stable["trace"].is_array());
    EXPECT_FALSE(stable["trace"].empty());

    auto limit = json_of({"limit-model", "lambda", "--cof", "w1"});
    EXPECT_EQ(limit["result"]["template"], "t(Π_p PE(⊕_n Z(p^n)^(λ))) ⊕ ⊕_p Z(p^∞)^(λ)");
    EXPECT_EQ(limit["result"]["stability"], "unknown");
    EXPECT_TRUE(limit["result"].contains("warning"));

    auto pure = json_of({"pure", "<(2)>", "Z/4"});
    EXPECT_EQ(pure["result"]["pure"], false);
    EXPECT_EQ(pure["trace"].size(), 2u);

    auto chain = json_of({"chain", "--witness", "3", "2", "2", "--indices"});
    EXPECT_EQ(chain["result"]["orders"], nlohmann::json({"81", "9", "1", "1"}));
    EXPECT_EQ(chain["result"]["stabilization"], 2);
    EXPECT_EQ(chain["result"]["indices"], nlohmann::json({"9", "9", "1"}));

    auto verify = json_of({"verify", "--suite", "limit-models"});
    EXPECT_EQ(verify["result"]["passed"], true);
    EXPECT_EQ(verify["result"]["criteria"].size(), 1u);
}

TEST(Cli, VerifyIsDeterministic) {
    Outcome a = run({"verify", "--suite", "stability"});
    Outcome b = run({"verify", "--suite", "8"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.substr(0, 17), "PASS [8] stabilit");
}
