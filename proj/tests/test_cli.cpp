#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ringcount");
  std::ostringstream out, err;
  const int code = ringcount::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, Binomial) {
  EXPECT_EQ(run({"binomial", "--ring", "gf:4", "--k", "3", "--kp", "2"}).out, "21\n");
  EXPECT_EQ(run({"binomial", "--ring", "gf:2", "--degree", "2", "--k", "3", "--kp", "2"}).out, "21\n");
  EXPECT_EQ(run({"binomial", "--ring", "zps:2:2", "-m", "2", "--k", "2", "--kp", "1"}).out, "20\n");
  EXPECT_EQ(run({"binomial", "--ring", "crt:(zps:2:1,zps:3:1)", "--k", "2", "--kp", "1"}).out, "12\n");
  const auto j = nlohmann::json::parse(run({"binomial", "--ring", "gf:2", "--k", "4", "--kp", "2", "--format", "json"}).out);
  EXPECT_EQ(j["value"], 35);
}

TEST(Cli, RestrictAndTraceOfTheCounterexample) {
  const Result r = run({"restrict", "--ring", "gf:2", "--degree", "2", "--gens", "(1,0,a);(0,1,b)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{000, 111}\n");
  const Result t = run({"trace", "--ring", "gf:2", "--degree", "2", "--gens", "(1,0,a);(0,1,b)"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(lines(t.out), 1u);
}

TEST(Cli, EnumStreamsAndCaches) {
  const Result r = run({"enum", "--ring", "gf:2", "-m", "2", "-l", "3", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 21u);
  const Result jobs = run({"enum", "--ring", "gf:2", "-m", "2", "-l", "3", "--k", "2", "--jobs", "3"});
  EXPECT_EQ(jobs.out, r.out);
  EXPECT_EQ(lines(run({"enum", "--ring", "gf:2", "-l", "3", "--all"}).out), 16u);
  EXPECT_EQ(lines(run({"enum", "--ring", "gf:2", "-l", "3", "--gens", "(1,0,0);(0,1,0)", "--kp", "1"}).out), 3u);
  EXPECT_EQ(lines(run({"enum", "--ring", "crt:(zps:2:1,zps:3:1)", "-l", "2", "--k", "1"}).out), 12u);

  const auto dir = std::filesystem::temp_directory_path() / ("ringcount_cli_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  const Result first = run({"enum", "--ring", "gf:3", "-l", "3", "--k", "1", "--cache-dir", dir.string(), "--format", "json"});
  EXPECT_EQ(lines(first.out), 13u);
  EXPECT_FALSE(std::filesystem::is_empty(dir));
  const Result second = run({"enum", "--ring", "gf:3", "-l", "3", "--k", "1", "--cache-dir", dir.string(), "--format", "json"});
  EXPECT_EQ(second.out, first.out);
  const Result forced =
      run({"enum", "--ring", "gf:3", "-l", "3", "--k", "1", "--cache-dir", dir.string(), "--format", "json", "--force"});
  EXPECT_EQ(forced.out, first.out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, CountingCommands) {
  const auto aleph = nlohmann::json::parse(run({"aleph", "--ring", "gf:2", "-m", "2", "-l", "3", "--k", "2", "--format", "json"}).out);
  EXPECT_EQ(aleph[0]["oracle_value"], 14);
  const Result omega = run({"omega", "--ring", "gf:2", "-m", "2", "-l", "3", "--k", "2", "--format", "csv"});
  EXPECT_EQ(omega.code, 0);
  EXPECT_NE(omega.out.find("omega_formula[aleph=oracle]"), std::string::npos);
  EXPECT_EQ(lines(omega.out), 4u);
  const Result lyle = run({"lyle", "--ring", "gf:2", "-m", "2", "-l", "3", "--k", "2", "--format", "csv"});
  EXPECT_NE(lyle.out.find("mismatch"), std::string::npos);
  EXPECT_EQ(run({"lyle", "--ring", "zps:2:2", "-m", "2", "-l", "2", "--k", "1"}).code, 64);
  EXPECT_EQ(run({"minimal", "--ring", "gf:2", "-m", "2", "-l", "3"}).out.substr(0, 25), "kappa 2, 14 minimal codes");
  EXPECT_EQ(run({"msets", "--ring", "gf:2", "-m", "2", "-l", "3"}).out, "2: 14\n3: 1\n");
  const Result dec = run({"decompose", "--ring", "gf:2", "-m", "2", "--gens", "(1,a,0)"});
  EXPECT_EQ(dec.code, 0);
  EXPECT_NE(dec.out.find("B1: (1,a,0)"), std::string::npos);
}

TEST(Cli, CrtAndReport) {
  const Result crt = run({"crt", "--ring", "crt:(zps:2:1,zps:3:1)", "-m", "2", "--gens", "(1,2,3)"});
  EXPECT_EQ(crt.code, 0);
  EXPECT_NE(crt.out.find("rank 1, free"), std::string::npos);
  EXPECT_NE(crt.out.find("f = 1 3 1"), std::string::npos);
  const Result first = run({"report", "--ring", "gf:2", "-m", "2", "-l", "3", "--k", "2", "--kp", "1"});
  const auto rep = nlohmann::json::parse(first.out);
  ASSERT_TRUE(rep.is_array());
  EXPECT_EQ(rep[0]["formula"], "aleph_formula");
  const Result again = run({"report", "--ring", "gf:2", "-m", "2", "-l", "3", "--k", "2", "--kp", "1", "--jobs", "2"});
  EXPECT_EQ(again.out, first.out);
  const Result pir = run({"report", "--ring", "crt:(zps:2:1,zps:3:1)", "-m", "2", "-l", "2", "--k", "1", "--kp", "1", "--format", "csv"});
  EXPECT_NE(pir.out.find("omega_hat[equal_rank]"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"binomial", "--ring", "gf:6", "--k", "1", "--kp", "1"}).code, 64);
  EXPECT_EQ(run({"binomial", "--ring", "gf:2", "--k", "1"}).code, 64);
  EXPECT_EQ(run({"aleph", "--ring", "gf:2", "-m", "2", "-l", "2", "--k", "3"}).code, 64);
  EXPECT_EQ(run({"restrict", "--ring", "gf:2", "-m", "2", "--gens", "(1,0);(q,1)"}).code, 64);
  EXPECT_EQ(run({"binomial", "--ring", "gf:2", "--k", "1", "--kp", "1", "--format", "xml"}).code, 64);
  EXPECT_EQ(run({"enum", "--ring", "gf:2", "-l", "3", "--k", "1", "--format", "csv"}).code, 64);
  const Result guard = run({"enum", "--ring", "gf:9", "-m", "3", "-l", "6", "--k", "3"});
  EXPECT_EQ(guard.code, 65);
  EXPECT_NE(guard.err.find("guard"), std::string::npos);
  EXPECT_EQ(run({"enum", "--ring", "gf:2", "-l", "4", "--k", "2", "--guard", "5"}).code, 65);
  EXPECT_EQ(run({"enum", "--ring", "gf:2", "-l", "4", "--k", "2", "--guard", "5", "--override-guard"}).code, 0);
}

TEST(Cli, VerifySubset) {
  const Result v = run({"verify", "--only", "1", "--only", "7"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(lines(v.out), 2u);
  EXPECT_EQ(v.out.substr(0, 8), "PASS  [1");
  EXPECT_EQ(run({"verify", "--only", "1", "--strict"}).code, 0);
}
