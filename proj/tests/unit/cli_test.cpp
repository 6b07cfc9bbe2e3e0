#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<const char*> args) {
  args.insert(args.begin(), "dunkl");
  std::ostringstream out, err;
  const int code = dunkl::cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EvalJackMatchesKnownValue) {
  const auto r = run({"eval", "jack", "--lambda", "2,1", "--alpha", "2", "--x", "1,2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["outputs"]["value"].get<double>(), 136.8, 1e-12);
  EXPECT_EQ(j["command"], "eval jack");
}

TEST(Cli, EvalJackExact) {
  const auto r =
      run({"eval", "jack", "--lambda", "2,1", "--alpha", "2", "--x", "1,2,3", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["outputs"]["value_exact"], "684/5");
  EXPECT_TRUE(j["outputs"]["expansion"].is_array());
}

TEST(Cli, EvalBesselBDefaultsToVectorLength) {
  const auto r = run({"eval", "besselB", "--k1", "3", "--k2", "0", "--x", "1,0.5", "--y",
                      "0.5,1", "--imag-y"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["outputs"]["value"].get<double>(),
              0.9456130630436675, 1e-14);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"eval", "nonsense"}).code, 2);
  EXPECT_EQ(run({"eval", "j1d", "--alpha", "0.5"}).code, 2);
  EXPECT_EQ(run({"eval", "j1d", "--alpha", "-3", "--t", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "jack", "--lambda", "1,2", "--alpha", "1", "--x", "1,2"}).code, 2);
  EXPECT_EQ(run({"verify", "prop12", "--k2", "0.7"}).code, 2);
  // singular closed form is a numeric failure, not a usage error
  const auto hc = run({"eval", "hc-oracle", "--x", "1,-1", "--y", "0.5,2"});
  EXPECT_EQ(hc.code, 1);
  EXPECT_FALSE(hc.err.empty());
}

TEST(Cli, VerifyIsDeterministic) {
  const std::vector<const char*> args{"verify", "prop11", "--k2", "1", "--N", "2",
                                      "--mu", "10,100", "--points", "3", "--seed", "4"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["records"].size(), 6u);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, VerifyFailingCeilingExitsOne) {
  const auto r = run({"verify", "prop11", "--k2", "1", "--N", "2", "--mu", "10,100",
                      "--points", "3", "--ceiling", "1e-9"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["pass"].get<bool>());
}

TEST(Cli, ConjectureAlwaysExitsZero) {
  const auto r = run({"verify", "conjecture", "--k2", "0.7", "--N", "2", "--mu", "10,100",
                      "--points", "2", "--ceiling", "1e-9"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, CsvToFile) {
  const auto path = std::filesystem::temp_directory_path() / "dunkl_cli_test.csv";
  const std::string p = path.string();
  const auto r = run({"verify", "onedim", "--mu", "4,16", "--points", "10", "--csv", "--out",
                      p.c_str()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "mu,x,y,lambda,weight,alpha,error,denominator,ratio,converged,boundary");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 20);
  std::filesystem::remove(path);
}

}  // namespace
