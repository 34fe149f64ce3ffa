#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace sixv;
using namespace sixv::cli;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_sixv(const std::string& args) {
  const std::string cmd = std::string(SIXV_BINARY) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sixv_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Config, Parsing) {
  EXPECT_EQ(split_list(" a, b ,c"), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(parse_positions("1,3"), (std::vector<std::size_t>{1, 3}));
  EXPECT_THROW(parse_positions("1,x"), Error);
  RunConfig cfg;
  EXPECT_EQ(cfg.resolved_backend(), Backend::rational);
  EXPECT_EQ(cfg.rational_weights().delta(), Rational(1, 2));
  cfg.angles = "1.1,0.3";
  EXPECT_EQ(cfg.resolved_backend(), Backend::real);
  cfg.backend = "rational";
  EXPECT_THROW(cfg.validate(), UsageError);
}

TEST(Commands, PartitionRational) {
  RunConfig cfg;
  cfg.weights = "2,1,2";
  auto res = cmd_partition(cfg, {3, "both"});
  EXPECT_EQ(res.exit_code, 0);
  ASSERT_EQ(res.records.size(), 2u);
  for (const auto& r : res.records) {
    EXPECT_EQ(r.value, "968");
    EXPECT_EQ(r.backend, "rational");
    EXPECT_FALSE(r.runtime_ms.has_value());
  }
  EXPECT_EQ(res.records[0].agreement["determinant"], true);
}

TEST(Commands, PartitionFloatAngles) {
  RunConfig cfg;
  cfg.angles = "1.1,0.3";
  auto res = cmd_partition(cfg, {4, "both"});
  ASSERT_EQ(res.records.size(), 2u);
  EXPECT_EQ(res.records[0].backend, "float");
  EXPECT_EQ(res.records[1].agreement["oracle"], true);
}

TEST(Commands, PartitionInhomogeneous) {
  RunConfig cfg;
  cfg.lambda = "1.0,1.1,1.25";
  cfg.nu = "0.0,0.05,-0.1";
  cfg.eta = "0.3";
  auto res = cmd_partition(cfg, {3, "both"});
  ASSERT_EQ(res.records.size(), 2u);
  EXPECT_EQ(res.records[0].agreement["determinant"], true);
  RunConfig dup = cfg;
  dup.lambda = "1.0,1.0,1.25";
  EXPECT_THROW(cmd_partition(dup, {3, "both"}), UsageError);
}

TEST(Commands, RowProbTableAndNormalization) {
  RunConfig cfg;
  cfg.weights = "2,1,2";
  auto res = cmd_rowprob(cfg, {4, 2, std::nullopt, "both"});
  ASSERT_EQ(res.records.size(), 2u * 6 + 2);
  EXPECT_EQ(res.records.back().value, "1");
  EXPECT_EQ(res.records.back().query["normalization"], true);
  auto one = cmd_rowprob(RunConfig{}, {3, 1, std::string("2"), "formula"});
  ASSERT_EQ(one.records.size(), 1u);
  EXPECT_EQ(one.records[0].value, "3/7");
}

TEST(Commands, EfpRoutes) {
  RunConfig cfg;
  auto res = cmd_efp(cfg, {4, 3, 2, "oracle,row-sum,rep1,rep2,double"});
  ASSERT_EQ(res.records.size(), 5u);
  for (const auto& r : res.records) EXPECT_EQ(r.value, "1/2");
  auto zero = cmd_efp(cfg, {4, 1, 2, "rep2"});
  EXPECT_EQ(zero.records[0].value, "0");
  EXPECT_THROW(cmd_efp(cfg, {4, 3, 2, "rep3"}), UsageError);
  EXPECT_THROW(cmd_efp(cfg, {4, 3, 2, "rep1,rep1"}), UsageError);
}

TEST(Commands, VerifySummary) {
  RunConfig cfg;
  cfg.seed = 7;
  VerifyArgs va;
  va.suite = "identity2";
  va.s = 2;
  va.trials = 4;
  auto res = cmd_verify(cfg, va);
  EXPECT_EQ(res.exit_code, 0);
  ASSERT_EQ(res.records.size(), 5u);
  EXPECT_EQ(res.records.back().value, "4/4 passed");
  va.suite = "nonsense";
  EXPECT_THROW(cmd_verify(cfg, va), UsageError);
}

TEST(Records, WritersAreStable) {
  RunConfig cfg;
  auto res = cmd_efp(cfg, {3, 2, 1, "oracle,rep1"});
  std::ostringstream j1, j2, c1;
  write_json(j1, res.records);
  write_json(j2, cmd_efp(cfg, {3, 2, 1, "oracle,rep1"}).records);
  EXPECT_EQ(j1.str(), j2.str());
  write_csv(c1, res.records);
  const std::string csv = c1.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "query,backend,route,value,agreement,runtime_ms");
  EXPECT_NE(csv.find("5/7"), std::string::npos);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_sixv("partition --N 3"), 0);
  EXPECT_EQ(run_sixv("partition"), 2);
  EXPECT_EQ(run_sixv("--backend rational --angles 1.1,0.3 partition --N 2"), 2);
  EXPECT_EQ(run_sixv("--qism-max 2 partition --N 3"), 2);
  EXPECT_EQ(run_sixv("efp --N 3 --r 4 --s 1"), 2);
}

TEST(Binary, RepeatedRunsAreByteIdentical) {
  const auto a = temp_file("a.json"), b = temp_file("b.json");
  const std::string args = "--seed 5 --format csv verify identity1 --s 2 --trials 6 --output ";
  ASSERT_EQ(run_sixv(args + a.string()), 0);
  ASSERT_EQ(run_sixv(args + b.string()), 0);
  const std::string x = slurp(a), y = slurp(b);
  EXPECT_FALSE(x.empty());
  EXPECT_EQ(x, y);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
