#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qkp/cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<const char*> args) {
  args.insert(args.begin(), "qkp");
  std::ostringstream out, err;
  const int code = qkp::cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(QKP_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, ExpandDegreeZero) {
  const CliResult r = run({"expand", "--w", "321", "--k", "2", "--p", "0"});
  EXPECT_EQ(r.code, qkp::cli::kPass);
  EXPECT_EQ(r.out, "G[321]\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"expand", "--w", "321", "--k", "2", "--p", "3"}).code, qkp::cli::kUsageError);
  EXPECT_EQ(run({"expand", "--w", "3x1", "--k", "2"}).code, qkp::cli::kUsageError);
  EXPECT_EQ(run({"expand", "--k", "2"}).code, qkp::cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, qkp::cli::kUsageError);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, qkp::cli::kUsageError);
  EXPECT_EQ(run({"--help"}).code, qkp::cli::kPass);
}

TEST(Cli, Goldens) {
  EXPECT_EQ(run({"chains", "--w", "321", "--k", "2", "--p", "2"}).out, golden("ex1_chains.txt"));
  EXPECT_EQ(run({"chains", "--w", "321", "--k", "2", "--p", "2", "--format", "json"}).out, golden("ex1_chains.json"));
  EXPECT_EQ(run({"expand", "--w", "321", "--k", "2", "--p", "2"}).out, golden("ex1_expand.txt"));
  EXPECT_EQ(run({"chains", "--w", "32514", "--k", "3", "--p", "2"}).out, golden("ex2_chains.txt"));
  EXPECT_EQ(run({"expand", "--w", "32514", "--k", "3", "--p", "2"}).out, golden("ex2_expand.txt"));
  EXPECT_EQ(run({"expand", "--w", "32514", "--k", "3", "--p", "2", "--format", "json"}).out, golden("ex2_expand.json"));
}

TEST(Cli, ChainsOfIdentity) {
  const CliResult r = run({"chains", "--w", "1", "--k", "1"});
  EXPECT_EQ(r.code, qkp::cli::kPass);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST(Cli, MonkAndMarkings) {
  const CliResult m = run({"monk", "--x", "321", "--k", "1"});
  EXPECT_EQ(m.code, qkp::cli::kPass);
  EXPECT_NE(m.out.find("G[321]"), std::string::npos);
  const CliResult k = run({"markings", "--w", "321", "--k", "2", "--p", "2"});
  EXPECT_EQ(k.code, qkp::cli::kPass);
  EXPECT_EQ(std::count(k.out.begin(), k.out.end(), '\n'), 15);
}

TEST(Cli, VerifyExitCodes) {
  const CliResult ok = run({"verify", "--suite", "classical", "--max-n", "3"});
  EXPECT_EQ(ok.code, qkp::cli::kPass) << ok.out;
  EXPECT_NE(ok.out.find("result: pass"), std::string::npos);
  const CliResult json = run({"verify", "--suite", "monk", "--format", "json"});
  EXPECT_EQ(json.code, qkp::cli::kPass);
  EXPECT_EQ(json.out.front(), '{');
}
