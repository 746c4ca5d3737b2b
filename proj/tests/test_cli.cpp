#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = gmotzkin::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

void expect_usage_error(std::vector<std::string> args, const std::string& token)
{
    const Outcome r = run(std::move(args));
    EXPECT_EQ(r.code, gmotzkin::cli::kExitUsage);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find(token), std::string::npos) << r.err;
}

}  // namespace

TEST(Cli, CountPolynomial)
{
    const Outcome r = run({"count", "--n", "2", "--avoid", "uvv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "a^2 + 3*a*b + b^2 + c\n");
}

TEST(Cli, CountEvaluated)
{
    EXPECT_EQ(run({"count", "--n", "2", "--avoid", "uvv", "--eval", "1,1,1"}).out, "6\n");
    EXPECT_EQ(run({"count", "--n", "2", "--avoid", "uvv", "--eval", "-3,4,16"}).out, "5\n");
    EXPECT_EQ(run({"count", "--n", "1", "--avoid", "uvv", "--no-h-on-axis"}).out, "b\n");
}

TEST(Cli, CountJson)
{
    EXPECT_EQ(run({"count", "--n", "1", "--format", "json"}).out,
              "[{\"coeff\":\"1\",\"ea\":1,\"eb\":0,\"ec\":0},{\"coeff\":\"1\",\"ea\":0,\"eb\":1,\"ec\":0}]\n");
    EXPECT_EQ(run({"count", "--n", "3", "--avoid", "uvv", "--eval", "1,1,1", "--format", "json"}).out, "\"22\"\n");
}

TEST(Cli, Enumerate)
{
    EXPECT_EQ(run({"enumerate", "--n", "1"}).out, "uv\nh\n");
    EXPECT_EQ(run({"enumerate", "--n", "1", "--format", "json"}).out, "[\"uv\",\"h\"]\n");
}

TEST(Cli, Sigma)
{
    EXPECT_EQ(run({"sigma", "--path", "uudv"}).out, "uuvd\n");
    EXPECT_EQ(run({"sigma-inv", "--path", "uuvd"}).out, "uudv\n");
}

TEST(Cli, FixedPoints)
{
    EXPECT_EQ(run({"fixed-points", "--n", "5"}).out, "F=125 a=72 b=30 c=23\n");
    EXPECT_EQ(run({"fixed-points", "--n", "2", "--list"}).out, "F=5 a=2 b=1 c=2\nud\nuhv\nuvh\nhuv\nhh\n");
    EXPECT_EQ(run({"fixed-points", "--n", "1", "--format", "json"}).out, "{\"F\":2,\"a\":1,\"b\":1,\"c\":0,\"n\":1}\n");
}

TEST(Cli, Series)
{
    EXPECT_EQ(run({"series", "--gf", "C", "--order", "4"}).out, "1\n1\n2\n5\n14\n");
    EXPECT_EQ(run({"series", "--gf", "G_uvv", "--order", "3", "--eval", "1,1,1"}).out, "1\n2\n6\n22\n");
}

TEST(Cli, Render)
{
    EXPECT_EQ(run({"render", "--path", "uhv"}).out, "   _\n /  |\n");
    EXPECT_EQ(run({"render", "--path", "ud", "--format", "svg"}).out.rfind("<svg", 0), 0u);
}

TEST(Cli, Tables)
{
    const Outcome r = run({"tables", "--max-n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(1,1,1) large Schroeder: 1,2,6,22,90\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("4 39 "), std::string::npos);
}

TEST(Cli, VerifyReportsEveryCriterion)
{
    const Outcome r = run({"verify", "--max-n", "5"});
    for (int id = 1; id <= 9; ++id)
        EXPECT_NE(r.out.find("AC" + std::to_string(id) + ' '), std::string::npos) << id;
    EXPECT_EQ(r.code, r.out.find(" FAIL ") == std::string::npos ? 0 : 1);
}

TEST(Cli, UsageErrorsNameTheToken)
{
    expect_usage_error({"sigma", "--path", "uxd"}, "uxd");
    expect_usage_error({"sigma", "--path", "uuvv"}, "uvv");
    expect_usage_error({"sigma-inv", "--path", "uvuv"}, "uvu");
    expect_usage_error({"count", "--n", "3", "--avoid", "uvq"}, "uvq");
    expect_usage_error({"count", "--n", "3", "--eval", "1,x,1"}, "x");
    expect_usage_error({"count", "--n", "3", "--eval", "1,1"}, "1,1");
    expect_usage_error({"series", "--gf", "Q"}, "Q");
    expect_usage_error({"render", "--path", "ud", "--format", "png"}, "png");
    expect_usage_error({"count", "--n", "3", "--format", "svg"}, "svg");
}

TEST(Cli, ParseErrors)
{
    EXPECT_EQ(run({}).code, gmotzkin::cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, gmotzkin::cli::kExitUsage);
    EXPECT_EQ(run({"count"}).code, gmotzkin::cli::kExitUsage);
    EXPECT_EQ(run({"count", "--n", "two"}).code, gmotzkin::cli::kExitUsage);
}

TEST(Cli, Help)
{
    const Outcome r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("fixed-points"), std::string::npos);
}

TEST(CliBinary, RunsAsSubprocess)
{
    const std::string cmd = std::string(GMOTZKIN_CLI_PATH) + " sigma --path uvud";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    std::array<char, 128> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe))
        out += buf.data();
    EXPECT_EQ(pclose(pipe), 0);
    EXPECT_EQ(out, "uudv\n");
}

TEST(CliBinary, ExitCodeForBadInput)
{
    const std::string cmd = std::string(GMOTZKIN_CLI_PATH) + " sigma --path uu 2>/dev/null";
    const int status = std::system(cmd.c_str());
    ASSERT_TRUE(WIFEXITED(status));
    EXPECT_EQ(WEXITSTATUS(status), 2);
}
