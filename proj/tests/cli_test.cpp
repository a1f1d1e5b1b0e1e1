#include "cli.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

namespace cli = burnside::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err, env);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, BraceletsJson) {
  auto r = run({"bracelets", "3", "2", "--json"});
  ASSERT_EQ(r.status, cli::kSuccess) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["orbitCount"], "4");
  EXPECT_EQ(j["method"], "closed-form");
  EXPECT_EQ(j["fixedSum"], "24");
  EXPECT_TRUE(j["fixedTable"].is_null());

  r = run({"--json", "bracelets", "4", "2", "--method", "burnside"});
  ASSERT_EQ(r.status, cli::kSuccess);
  EXPECT_EQ(json::parse(r.out)["fixedTable"]["entries"].size(), 8u);
}

TEST(Cli, BraceletsMethodsAgree) {
  for (int n = 3; n <= 8; ++n) {
    for (int q = 1; q <= 3; ++q) {
      const auto closed = run({"bracelets", std::to_string(n), std::to_string(q), "--json",
                               "--method", "closed"});
      const auto brute = run({"bracelets", std::to_string(n), std::to_string(q), "--json",
                              "--method", "brute"});
      ASSERT_EQ(json::parse(closed.out)["orbitCount"], json::parse(brute.out)["orbitCount"]);
    }
  }
  const auto all = run({"bracelets", "6", "3", "--method", "all", "--json"});
  ASSERT_EQ(all.status, cli::kSuccess);
  const auto j = json::parse(all.out);
  EXPECT_TRUE(j["agree"]);
  EXPECT_EQ(j["reports"].size(), 3u);
  EXPECT_EQ(run({"bracelets", "5", "2", "--method", "closed,brute"}).status, cli::kSuccess);
}

TEST(Cli, HumanReadableTableUsesLabels) {
  const auto r = run({"fixed-table", "4", "2"});
  ASSERT_EQ(r.status, cli::kSuccess);
  EXPECT_NE(r.out.find("a^3"), std::string::npos);
  EXPECT_NE(r.out.find("b*a^1"), std::string::npos);
  EXPECT_NE(r.out.find("total  48"), std::string::npos);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"phi", "12"}).out, "phi(12) = 4\n");
  EXPECT_EQ(run({"divisors", "12"}).out, "divisors(12) = 1 2 3 4 6 12\n");
  EXPECT_EQ(json::parse(run({"phi-sum", "6", "--json"}).out)["witness"]["sum"], 6);
  EXPECT_EQ(json::parse(run({"phi-sum", "6", "--method", "burnside", "--json"}).out)["witness"]["sum"],
            "6");
  const auto orbits = json::parse(run({"orbits", "3", "2", "--list", "--json"}).out);
  EXPECT_EQ(orbits["orbitCount"], "4");
  EXPECT_EQ(orbits["representatives"], json::parse("[[0,0,0],[0,0,1],[0,1,1],[1,1,1]]"));
  const auto fermat = json::parse(run({"fermat", "2", "5", "--json"}).out);
  EXPECT_TRUE(fermat["verified"]);
  EXPECT_EQ(fermat["witness"]["powerResidue"], "2");
  EXPECT_EQ(run({"fermat", "-4", "7"}).status, cli::kSuccess);
  const auto action = json::parse(
      run({"fermat", "3", "2", "--power", "2", "--method", "action", "--json"}).out);
  EXPECT_EQ(action["witness"]["fixedSize"], "3");
  const auto congruence = json::parse(run({"congruence", "3", "1", "2", "--json"}).out);
  EXPECT_EQ(congruence["setSize"], "8");
  EXPECT_EQ(congruence["fixedSize"], "2");
  EXPECT_TRUE(congruence["congruent"]);
}

TEST(Cli, UsageErrorsWriteNothingToStdout) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"phi"},
           {"phi", "0"},
           {"phi", "x"},
           {"bracelets", "2", "2"},
           {"bracelets", "3", "2", "--method", "fast"},
           {"fermat", "2", "4"},
           {"fermat", "2", "5", "--power", "0"},
           {"congruence", "3", "1", "2", "--unknown"},
           {"phi", "5", "--cap", "-1"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.status, cli::kUsageError) << args.size();
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, CapFlagEnvironmentAndExitCode) {
  auto r = run({"orbits", "10", "4", "--cap", "1000"});
  EXPECT_EQ(r.status, cli::kCapExceeded);
  EXPECT_TRUE(r.out.empty());
  r = run({"orbits", "10", "4"}, "1000");
  EXPECT_EQ(r.status, cli::kCapExceeded);
  r = run({"orbits", "10", "4", "--cap", "2000000"}, "1000");
  EXPECT_EQ(r.status, cli::kSuccess);
  EXPECT_EQ(run({"orbits", "3", "2"}, "junk").status, cli::kUsageError);
  EXPECT_EQ(run({"congruence", "5", "2", "3", "--mode", "enumerate"}).status, cli::kCapExceeded);
}

TEST(Cli, JsonIsByteStable) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bracelets", "6", "3", "--method", "all", "--json"},
           {"phi-sum", "60", "--method", "burnside", "--json"},
           {"fermat", "-7", "13", "--power", "3", "--json"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, BigCountsPrintInFull) {
  const auto r = run({"bracelets", "64", "4", "--json"});
  ASSERT_EQ(r.status, cli::kSuccess);
  const std::string count = json::parse(r.out)["orbitCount"];
  EXPECT_GT(count.size(), 30u);
  EXPECT_EQ(count.find_first_not_of("0123456789"), std::string::npos);
}
