#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace xasp::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = XASP_DATA_DIR;
const std::string kPolicy = kData + "/hospital/hospital.pol";
const std::string kRequest = kData + "/hospital/q1.req";
const std::string kDomain = kData + "/hospital/hospital.dom";

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("xasp_cli_test_" + name)).string();
}

TEST(Cli, EvalMatchesGolden) {
  auto r = run_cli({"eval", "--policy", kPolicy, "--request", kRequest});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, slurp(XASP_GOLDEN_DIR "/hospital_q1.eval"));
}

TEST(Cli, EmitThenSolveAgreesWithEval) {
  const std::string lp = temp_path("q1.lp");
  auto emit = run_cli({"emit-asp", "--policy", kPolicy, "--request", kRequest, "-o", lp});
  ASSERT_EQ(emit.code, kOk) << emit.err;
  EXPECT_EQ(slurp(lp), slurp(XASP_GOLDEN_DIR "/hospital_q1.lp"));
  auto solved = run_cli({"solve", lp});
  EXPECT_EQ(solved.code, kOk);
  EXPECT_NE(solved.out.find("val(root,p)"), std::string::npos);
  EXPECT_NE(solved.out.find("answer sets: 1"), std::string::npos);
  std::remove(lp.c_str());
}

TEST(Cli, SolveExitCodes) {
  const std::string lp = temp_path("none.lp");
  std::ofstream(lp) << "a :- not a.\n";
  EXPECT_EQ(run_cli({"solve", lp}).code, kNegative);
  std::ofstream(lp) << "a :- not b.\nb :- not a.\n";
  auto all = run_cli({"solve", "--all", lp});
  EXPECT_EQ(all.code, kOk);
  EXPECT_NE(all.out.find("answer 2:"), std::string::npos);
  std::ofstream(lp) << "a :- \n";
  auto bad = run_cli({"solve", lp});
  EXPECT_EQ(bad.code, kInputError);
  EXPECT_FALSE(bad.err.empty());
  std::remove(lp.c_str());
}

TEST(Cli, CheckGapOutput) {
  auto r = run_cli({"check-gap", "--policy", kPolicy, "--domain", kDomain});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_NE(r.out.find("path: both-agree"), std::string::npos);
  EXPECT_NE(r.out.find("VERDICT gaps_found"), std::string::npos);
  std::string expected;
  std::istringstream golden(slurp(XASP_GOLDEN_DIR "/hospital.gaps"));
  for (std::string line; std::getline(golden, line);) expected += "GAP " + line + "\n";
  std::string listed;
  std::istringstream out(r.out);
  for (std::string line; std::getline(out, line);) {
    if (line.starts_with("GAP ")) listed += line + "\n";
  }
  EXPECT_EQ(listed, expected);
  EXPECT_EQ(run_cli({"check-gap", "--policy", kPolicy, "--domain", kDomain}).out, r.out);
}

TEST(Cli, CheckGapFree) {
  const std::string pol = temp_path("free.pol");
  std::ofstream(pol) << "rule r effect permit\npolicy pol target null combine fa rules r\n";
  auto r = run_cli({"check-gap", "--policy", pol, "--domain", kDomain});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("VERDICT gap_free"), std::string::npos);
  std::remove(pol.c_str());
}

TEST(Cli, Verify) {
  auto holds = run_cli({"verify", "--policy", kPolicy, "--domain", kDomain, "--property",
                        kData + "/hospital/no_anonymous_read.prop"});
  EXPECT_EQ(holds.code, kOk);
  EXPECT_NE(holds.out.find("VERDICT holds"), std::string::npos);
  auto violated = run_cli({"verify", "--policy", kPolicy, "--domain", kDomain, "--property",
                           kData + "/hospital/doctor_edit.prop"});
  EXPECT_EQ(violated.code, kNegative);
  EXPECT_NE(violated.out.find("VERDICT violated"), std::string::npos);
  EXPECT_NE(violated.out.find("CEX "), std::string::npos);
}

TEST(Cli, CrossCheck) {
  auto one = run_cli({"cross-check", "--policy", kPolicy, "--request", kRequest});
  EXPECT_EQ(one.code, kOk);
  EXPECT_NE(one.out.find("VERDICT pass"), std::string::npos);
  auto compat = run_cli({"cross-check", "--policy", kData + "/synthetic/s1_fa.pol", "--request", kRequest,
                         "--compat-literal-transform"});
  EXPECT_EQ(compat.code, kNegative);
  EXPECT_NE(compat.out.find("VERDICT fail"), std::string::npos);
  auto sampled = run_cli({"cross-check", "--policy", kPolicy, "--domain", kDomain, "--with-errors",
                          "--samples", "50", "--seed", "9"});
  EXPECT_EQ(sampled.code, kOk);
  EXPECT_NE(sampled.out.find("requests: 50, failures: 0"), std::string::npos);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli({}).code, kInputError);
  EXPECT_EQ(run_cli({"eval", "--policy", kPolicy}).code, kInputError);
  EXPECT_EQ(run_cli({"eval", "--policy", "/nonexistent.pol", "--request", kRequest}).code, kInputError);
  EXPECT_EQ(run_cli({"cross-check", "--policy", kPolicy}).code, kInputError);
  const std::string pol = temp_path("bad.pol");
  std::ofstream(pol) << "rule r effect permit\npolicy p target null combine po rules r zz\n";
  auto r = run_cli({"eval", "--policy", pol, "--request", kRequest});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("zz"), std::string::npos);
  std::remove(pol.c_str());
}

}  // namespace
}  // namespace xasp::cli
