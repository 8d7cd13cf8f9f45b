#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfcat/cli.hpp"

using namespace hopfcat;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hopfcat-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliResult run(std::vector<std::string> args, bool with_cache = true) {
    if (with_cache) {
      args.push_back("--cache-dir");
      args.push_back(dir_.string());
    }
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

} // namespace

TEST_F(CliTest, VerifyZ2FullSuitePasses) {
  auto r = run({"verify", "--group", "Z2", "--suite", "full"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("all checks pass"), std::string::npos);
}

TEST_F(CliTest, VerifyJsonSchemaAndDeterminism) {
  auto a = run({"verify", "--group", "S3", "--suite", "smoke", "--format", "json", "--seed", "7"});
  auto b = run({"verify", "--group", "S3", "--suite", "smoke", "--format", "json", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("group"), "S3");
  ASSERT_FALSE(j.at("checks").empty());
  std::string prev_id;
  for (const auto& c : j.at("checks")) {
    EXPECT_TRUE(c.contains("id") && c.contains("subject") && c.contains("pass") && c.contains("detail"));
    EXPECT_LE(prev_id, c.at("id").get<std::string>());
    prev_id = c.at("id").get<std::string>();
  }
}

TEST_F(CliTest, UnknownGroupIsUsageError) {
  auto r = run({"verify", "--group", "BadName"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnknownName"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"double"}).code, 2);
  EXPECT_EQ(run({"verify", "--group", "Z2", "--suite", "huge"}).code, 2);
  EXPECT_EQ(run({"chartab", "--group", "perm:(1 2"}).code, 2);
  EXPECT_EQ(run({"centralizer", "--group", "S3"}).code, 2);
  EXPECT_EQ(run({"centralizer", "--group", "S3", "--triple", "M=1,H=e"}).code, 2);  // <1> is not normal
  EXPECT_EQ(run({"centralizer", "--group", "Z2", "--simples", "1"}).code, 2);      // not fusion closed
  EXPECT_EQ(run({"double", "fusion", "--group", "Z2", "--format", "dot"}).code, 2);
}

TEST_F(CliTest, BoundExceededExitsThree) {
  EXPECT_EQ(run({"double", "smatrix", "--group", "S4"}).code, 3);
  EXPECT_EQ(run({"double", "smatrix", "--group", "S3", "--max-dim", "20"}).code, 3);
}

TEST_F(CliTest, VerifySkipsAboveDimBound) {
  auto r = run({"verify", "--group", "S3", "--instance", "double", "--max-dim", "20", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  for (const auto& c : j.at("checks")) {
    EXPECT_TRUE(c.at("skipped").get<bool>());
    EXPECT_EQ(c.at("detail").get<std::string>().rfind("skipped: dim bound", 0), 0u);
  }
}

TEST_F(CliTest, IrrepsOfS3) {
  auto r = run({"double", "irreps", "--group", "S3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 8u);
  std::multiset<int> dims;
  for (const auto& x : j)
    dims.insert(x.at("dim").get<int>());
  EXPECT_EQ(dims, (std::multiset<int>{1, 1, 2, 2, 2, 2, 3, 3}));
}

TEST_F(CliTest, CacheHitIsByteIdentical) {
  for (const char* cmd : {"smatrix", "lattice", "chartab"}) {
    std::vector<std::string> args;
    if (std::string(cmd) == "smatrix")
      args = {"double", "smatrix", "--group", "S3"};
    else if (std::string(cmd) == "lattice")
      args = {"subcats", "lattice", "--group", "S3", "--format", "json"};
    else
      args = {"chartab", "--group", "Q8"};
    auto cold = run(args);
    auto warm = run(args);
    auto fresh = run([&] { auto a = args; a.push_back("--no-cache"); return a; }(), false);
    ASSERT_EQ(cold.code, 0) << cold.err;
    EXPECT_EQ(cold.out, warm.out) << cmd;
    EXPECT_EQ(cold.out, fresh.out) << cmd;
  }
  EXPECT_EQ(std::distance(fs::directory_iterator(dir_), fs::directory_iterator{}), 3);
}

TEST_F(CliTest, CorruptCacheEntryIsDiscarded) {
  auto first = run({"double", "smatrix", "--group", "Z3"});
  ASSERT_EQ(first.code, 0);
  for (const auto& e : fs::directory_iterator(dir_))
    std::ofstream(e.path()) << "{not json";
  auto again = run({"double", "smatrix", "--group", "Z3"});
  EXPECT_EQ(again.code, 0);
  EXPECT_EQ(again.out, first.out);
  EXPECT_NE(again.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, DeletedCacheDirAndPurge) {
  ASSERT_EQ(run({"chartab", "--group", "S3"}).code, 0);
  fs::remove_all(dir_);
  ASSERT_EQ(run({"chartab", "--group", "S3"}).code, 0);
  auto p = run({"cache", "purge"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("removed 1 cache entry"), std::string::npos);
}

TEST_F(CliTest, LatticeDot) {
  auto r = run({"subcats", "lattice", "--group", "Z2", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_NE(r.out.find("fpdim=4"), std::string::npos);
  EXPECT_NE(r.out.find("color=red"), std::string::npos);
}

TEST_F(CliTest, CentralizerMethodsAgree) {
  auto r = run({"centralizer", "--group", "S3", "--triple", "M=e,H=3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("agree").get<bool>());
  EXPECT_EQ(j.at("results").size(), 3u);
  EXPECT_EQ(j.at("fpdim").get<int>() * j.at("results")[0].at("fpdim").get<int>(), 36);
  auto t = run({"centralizer", "--group", "S3", "--simples", "0,1", "--instance", "triangular", "--method", "phi"});
  EXPECT_EQ(t.code, 0) << t.err;
}

TEST_F(CliTest, OtherSubcommandsRun) {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"group", "info", "--group", "D4"},
           {"double", "fusion", "--group", "S3"},
           {"coideals", "list", "--group", "Z4"},
           {"coideals", "list", "--group", "S3", "--instance", "triangular"},
           {"coideals", "integral", "--group", "S3", "--triple", "M=G,H=e,B=triv"},
           {"coideals", "integral", "--group", "Z2", "--index", "0", "--format", "json"},
           {"subcats", "list", "--group", "Q8"}}) {
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[0] << " " << args[1] << ": " << r.err;
    EXPECT_FALSE(r.out.empty());
  }
}
