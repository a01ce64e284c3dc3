#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

using namespace recur2;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "recur2");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

void expect_json_round_trip(const std::string& line) {
    std::string text = line;
    if (!text.empty() && text.back() == '\n') text.pop_back();
    EXPECT_EQ(json::parse(text).dump(), text);
}

}  // namespace

TEST(Cli, SeqPresetJson) {
    const auto r = run({"seq", "--preset", "mersenne", "--to", "6", "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"lo\":0,\"values\":[\"0\",\"1\",\"3\",\"7\",\"15\",\"31\",\"63\"]}\n");
    expect_json_round_trip(r.out);
    const auto w = window_from_json(json::parse(r.out));
    EXPECT_EQ(w.at(6), RingValue(63));
}

TEST(Cli, SeqPlainAndPolynomial) {
    auto r = run({"seq", "--x", "1", "--y", "1", "--init", "2,1", "--from", "3", "--to", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3: 4\n4: 7\n5: 11\n");

    r = run({"seq", "--x", "0,2", "--y", "-1", "--to", "3", "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"lo\":0,\"values\":[[],[\"1\"],[\"0\",\"2\"],[\"-1\",\"0\",\"4\"]]}\n");
    expect_json_round_trip(r.out);

    EXPECT_EQ(run({"seq", "--x", "1", "--y", "0"}).code, 2);
    EXPECT_EQ(run({"seq", "--preset", "nope"}).code, 2);
    EXPECT_EQ(run({"seq", "--x", "1"}).code, 2);
}

TEST(Cli, Explicit) {
    const auto r = run({"explicit", "--x", "3", "--y", "-2", "--n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "15\n");
}

TEST(Cli, VerifyDocagne) {
    auto r = run({"verify", "docagne", "--x", "2", "--y", "3", "--b", "1,4", "--c", "2,1", "--k", "1", "--m", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("lhs: 42\n"), std::string::npos);
    EXPECT_NE(r.out.find("rhs: 42\n"), std::string::npos);
    EXPECT_NE(r.out.find("holds: true\n"), std::string::npos);

    r = run({"--json", "verify", "docagne", "--x", "2", "--y", "3", "--b", "1,4", "--c", "2,1", "--k", "1", "--m", "2"});
    EXPECT_EQ(r.code, 0);
    expect_json_round_trip(r.out);
    const auto report = report_from_json(json::parse(r.out));
    EXPECT_TRUE(report.holds);
    EXPECT_EQ(report.lhs, RingValue(42));
    EXPECT_TRUE(reevaluate(report).holds);
}

TEST(Cli, VerifyOtherIdentities) {
    EXPECT_EQ(run({"verify", "cassini", "--x", "1", "--y", "2", "--b", "1,1", "--c", "0,1", "--k", "2"}).code, 0);
    EXPECT_EQ(run({"verify", "vajda", "--x", "3", "--y", "-2", "--k", "1", "--m", "2", "--p", "1"}).code, 0);
    EXPECT_EQ(run({"verify", "catalan", "--x", "2", "--y", "1", "--n", "4", "--r", "2"}).code, 0);
    EXPECT_EQ(run({"verify", "four-param", "--x", "1", "--y", "1", "--k", "1", "--m", "2", "--p", "3", "--q", "2"}).code, 0);
    EXPECT_EQ(run({"verify", "index-reduction", "--x", "1", "--y", "1", "--b", "1,1", "--c", "0,1", "--k", "3",
                   "--m", "2", "--p", "2"})
                  .code,
              0);
    EXPECT_EQ(run({"verify", "reduced-docagne", "--x", "1", "--y", "1", "--b", "1,1", "--c", "2,3", "--m", "4"}).code, 0);

    const auto t = run({"verify", "cassini", "--x", "0,2", "--y", "-1", "--b", "0,1;-1,0,2", "--c", "1;0,1", "--k", "1"});
    EXPECT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("rhs: -z^2 + 1"), std::string::npos);
}

TEST(Cli, VerifyProp8Conventions) {
    const std::vector<std::string> base = {"verify", "prop8", "--u", "1,2,3,4", "--v", "5,1,2", "--b", "1,0",
                                           "--c", "0,1", "--k", "1", "--n", "1"};
    EXPECT_EQ(run(base).code, 0);
    auto literal = base;
    literal.insert(literal.end(), {"--convention", "literal"});
    const auto r = run(literal);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("rhs: -3"), std::string::npos);
}

TEST(Cli, VerifyErrors) {
    EXPECT_EQ(run({"verify", "nonsense", "--x", "1", "--y", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "docagne", "--x", "1", "--y", "1", "--b", "1,1", "--c", "0,1", "--k", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "catalan", "--x", "1", "--y", "1", "--n", "2", "--r", "3"}).code, 2);
    EXPECT_EQ(run({"verify", "docagne", "--x", "1", "--y", "1", "--b", "1,x", "--c", "0,1", "--k", "1", "--m", "1"}).code, 2);
}

TEST(Cli, RecoverA) {
    auto r = run({"verify", "recover-a", "--x", "2", "--y", "3", "--b-window", "1,4,11,34", "--c-window", "2,1,8,19",
                  "--k", "1", "--m", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n");
    r = run({"verify", "recover-a", "--x", "2", "--y", "3", "--b-window", "1,4,11,34", "--c-window", "1,4,11,34",
             "--k", "1", "--m", "2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("SingularInitialPair"), std::string::npos);
}

TEST(Cli, Words) {
    auto r = run({"words", "count", "--spec", "alphabet=3; forbid=01,02", "--n", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "15\n");

    r = run({"words", "enumerate", "--spec", "alphabet=2; forbid=01", "--n", "3"});
    EXPECT_EQ(r.out, "000\n100\n110\n111\n");

    r = run({"--json", "words", "enumerate", "--spec", "alphabet=2;evenrun=0", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    expect_json_round_trip(r.out);
    EXPECT_EQ(json::parse(r.out).at("spec"), "alphabet=2; evenrun=0");

    r = run({"words", "count", "--spec", "alphabet=2; forbid=21", "--n", "3"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("LetterOutOfRange"), std::string::npos);

    EXPECT_EQ(run({"words", "enumerate", "--spec", "alphabet=4", "--n", "3", "--cap", "63"}).code, 2);
    EXPECT_EQ(run({"words", "enumerate", "--spec", "alphabet=4", "--n", "3", "--cap", "64"}).code, 0);
}

TEST(Cli, WordsCapFromEnvironment) {
    ::setenv("RECUR2_CAP", "10", 1);
    const auto blocked = run({"words", "enumerate", "--spec", "alphabet=2", "--n", "4"});
    const auto flag_wins = run({"words", "enumerate", "--spec", "alphabet=2", "--n", "4", "--cap", "16"});
    ::unsetenv("RECUR2_CAP");
    EXPECT_EQ(blocked.code, 2);
    EXPECT_NE(blocked.err.find("CapExceeded"), std::string::npos);
    EXPECT_EQ(flag_wins.code, 0);
}

TEST(Cli, Tilings) {
    const auto r = run({"tilings", "--n", "3", "--colors1", "2", "--colors2", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "16\n");
    EXPECT_EQ(run({"tilings", "--n", "3", "--colors1", "0", "--colors2", "2"}).code, 2);
}

TEST(Cli, Crosscheck) {
    auto r = run({"--json", "crosscheck", "--preset", "fibonacci", "--max-n", "12"});
    EXPECT_EQ(r.code, 0);
    expect_json_round_trip(r.out);
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j.at("agree").get<bool>());
    EXPECT_EQ(j.at("rows").at(5).at("word_count"), "5");

    r = run({"crosscheck", "--all", "--max-n", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("DISAGREE"), std::string::npos);
    EXPECT_EQ(run({"crosscheck"}).code, 2);
}

TEST(Cli, Fuzz) {
    const auto a = run({"fuzz", "--seed", "42", "--trials", "1000"});
    EXPECT_EQ(a.code, 0);
    EXPECT_NE(a.out.find("failures: 0\n"), std::string::npos);
    const auto b = run({"fuzz", "--seed", "42", "--trials", "1000"});
    EXPECT_EQ(a.out, b.out);

    const auto j1 = run({"--json", "fuzz", "--seed", "7", "--trials", "200"});
    const auto j2 = run({"--json", "fuzz", "--seed", "7", "--trials", "200"});
    EXPECT_EQ(j1.out, j2.out);
    expect_json_round_trip(j1.out);

    EXPECT_EQ(run({"fuzz", "--seed", "1", "--trials", "0"}).code, 2);
    EXPECT_EQ(run({"fuzz", "--trials", "10"}).code, 2);
}

TEST(Cli, Presets) {
    auto r = run({"--json", "presets"});
    EXPECT_EQ(r.code, 0);
    expect_json_round_trip(r.out);
    EXPECT_EQ(json::parse(r.out).size(), 12U);
    r = run({"presets", "list"});
    EXPECT_NE(r.out.find("chebyshev_T"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
