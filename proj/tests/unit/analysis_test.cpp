#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "random_policy.hpp"
#include "xasp/analysis.hpp"
#include "xasp/asp/solve.hpp"
#include "xasp/error.hpp"
#include "xasp/semantics.hpp"

namespace xasp {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> golden_lines(const std::string& name) {
  std::istringstream in(slurp(XASP_GOLDEN_DIR "/" + name));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::vector<std::string> keys(const AnalysisReport& r) {
  std::vector<std::string> out;
  for (const auto& q : r.counterexamples) out.push_back(q.key());
  return out;
}

PolicyTree load_tree(const std::string& rel) { return parse_policy(slurp(XASP_DATA_DIR "/" + rel)); }
AttributeDomain load_domain(const std::string& rel) {
  return parse_domain(slurp(XASP_DATA_DIR "/" + rel));
}

TEST(Domain, ParseAndPrint) {
  auto d = parse_domain("# roles\nsubject: nurse doctor\naction: read\n");
  EXPECT_EQ(d.values.at("subject"), (std::vector<std::string>{"doctor", "nurse"}));
  EXPECT_EQ(parse_domain(print_domain(d)), d);
  EXPECT_THROW(parse_domain("subject: a a\n"), InvalidInput);
  EXPECT_THROW(parse_domain("subject:\n"), InvalidInput);
  EXPECT_THROW(parse_domain("subject_db: a\n"), InvalidInput);
  EXPECT_THROW(parse_domain("subject a\n"), ParseError);
  EXPECT_THROW(AttributeDomain{}.check(), InvalidInput);
}

TEST(Property, ParseAndPrint) {
  auto spec = parse_property(slurp(XASP_DATA_DIR "/hospital/no_anonymous_read.prop"));
  EXPECT_EQ(spec.name, "no_anonymous_read");
  EXPECT_EQ(spec.include.size(), 2u);
  EXPECT_EQ(spec.exclude.size(), 4u);
  EXPECT_EQ(spec.violation, Decision::Permit);
  EXPECT_EQ(parse_property(print_property(spec)), spec);
  EXPECT_THROW(parse_property("property x\nviolation maybe\n"), ParseError);
}

TEST(Generator, Counts) {
  AttributeDomain d{{{"subject", {"doctor", "nurse"}}}};
  auto g = request_generator(d, false);
  EXPECT_EQ(g.rules.size(), 2u);
  EXPECT_EQ(g.choices.size(), 1u);
  EXPECT_EQ(asp::solve(g).answer_sets.size(), 2u);

  AttributeDomain four{{{"a", {"x", "y"}}, {"b", {"x", "y"}}, {"c", {"x", "y", "z"}}, {"e", {"x"}}}};
  EXPECT_EQ(request_space_size(four, false), 12u);
  EXPECT_EQ(enumerate_requests(four, false).size(), 12u);
  EXPECT_EQ(asp::solve(request_generator(four, false)).answer_sets.size(), 12u);

  AttributeDomain one{{{"a", {"x"}}}};
  EXPECT_EQ(asp::solve(request_generator(one, true)).answer_sets.size(), 2u);
  EXPECT_EQ(enumerate_requests(one, false).size(), 1u);
  auto with_errors = enumerate_requests(one, true);
  ASSERT_EQ(with_errors.size(), 2u);
  EXPECT_EQ(with_errors[1].key(), "error(a(x))");
  EXPECT_EQ(request_space_size(four, true), 12u * 16u);
}

TEST(CheckGap, SyntheticPoliciesMatchPinnedGaps) {
  for (std::string name : {"s1_fa", "s2_po", "s3_nested"}) {
    auto r = check_gap(load_tree("synthetic/" + name + ".pol"),
                       load_domain("synthetic/" + name + ".dom"));
    EXPECT_FALSE(r.mismatch) << *r.mismatch;
    EXPECT_TRUE(r.asp_ran && r.oracle_ran);
    EXPECT_EQ(keys(r), golden_lines(name + ".gaps")) << name;
    EXPECT_EQ(r.verdict, AnalysisReport::Verdict::Violated);
  }
}

TEST(CheckGap, FirstApplicableDoctorExample) {
  auto r = check_gap(load_tree("synthetic/s1_fa.pol"), load_domain("synthetic/s1_fa.dom"));
  EXPECT_EQ(keys(r), (std::vector<std::string>{"action(read),subject(nurse)"}));
}

TEST(CheckGap, HospitalMatchesPinnedGaps) {
  auto tree = load_tree("hospital/hospital.pol");
  auto dom = load_domain("hospital/hospital.dom");
  auto r = check_gap(tree, dom);
  EXPECT_FALSE(r.mismatch);
  EXPECT_EQ(r.request_space, 160u);
  EXPECT_EQ(keys(r), golden_lines("hospital.gaps"));
  for (const auto& q : r.counterexamples) EXPECT_EQ(eval_root(tree, q).decision, Decision::NotApplicable);
}

TEST(CheckGap, AlwaysPermitIsGapFree) {
  auto tree = parse_policy("rule r effect permit\npolicy pol target null combine fa rules r\n");
  auto r = check_gap(tree, AttributeDomain{{{"a", {"x", "y"}}}});
  EXPECT_EQ(r.verdict, AnalysisReport::Verdict::Holds);
  EXPECT_TRUE(r.counterexamples.empty());
}

TEST(CheckGap, SinglePathsAgree) {
  auto tree = load_tree("hospital/hospital.pol");
  auto dom = load_domain("hospital/hospital.dom");
  AnalysisOptions asp_only{.path = AnalysisPath::Asp};
  AnalysisOptions oracle_only{.path = AnalysisPath::Oracle};
  auto a = check_gap(tree, dom, asp_only);
  auto o = check_gap(tree, dom, oracle_only);
  EXPECT_TRUE(a.asp_ran && !a.oracle_ran);
  EXPECT_TRUE(o.oracle_ran && !o.asp_ran);
  EXPECT_EQ(keys(a), keys(o));
}

TEST(CheckGap, WithErrorsPathsAgree) {
  auto tree = load_tree("synthetic/s3_nested.pol");
  auto dom = load_domain("synthetic/s3_nested.dom");
  auto r = check_gap(tree, dom, {.with_errors = true});
  EXPECT_EQ(r.request_space, 12u * 8u);
  EXPECT_FALSE(r.mismatch);
  EXPECT_TRUE(r.oracle_ran);
}

TEST(CheckGap, SamplesAboveCap) {
  auto tree = load_tree("hospital/hospital.pol");
  auto dom = load_domain("hospital/hospital.dom");
  AnalysisOptions o{.with_errors = true, .request_cap = 1000, .samples = 200, .seed = 3};
  auto r = check_gap(tree, dom, o);
  EXPECT_TRUE(r.sampled);
  EXPECT_TRUE(r.oracle_skipped);
  EXPECT_FALSE(r.oracle_ran);
  EXPECT_LE(r.requests_checked, 200u);
  EXPECT_EQ(keys(check_gap(tree, dom, o)), keys(r));
  for (const auto& q : r.counterexamples) EXPECT_EQ(eval_root(tree, q).decision, Decision::NotApplicable);
}

TEST(VerifyProperty, AnonymousReadMatchesPinnedVerdict) {
  auto tree = load_tree("hospital/hospital.pol");
  auto dom = load_domain("hospital/hospital.dom");
  auto spec = parse_property(slurp(XASP_DATA_DIR "/hospital/no_anonymous_read.prop"));
  auto r = verify_property(tree, dom, spec);
  EXPECT_FALSE(r.mismatch);
  EXPECT_EQ(keys(r), golden_lines("hospital_no_anonymous_read.cex"));
  EXPECT_EQ(r.verdict, AnalysisReport::Verdict::Holds);
}

TEST(VerifyProperty, DoctorEditMatchesPinnedCounterexamples) {
  auto tree = load_tree("hospital/hospital.pol");
  auto dom = load_domain("hospital/hospital.dom");
  auto spec = parse_property(slurp(XASP_DATA_DIR "/hospital/doctor_edit.prop"));
  auto r = verify_property(tree, dom, spec);
  EXPECT_FALSE(r.mismatch);
  EXPECT_EQ(r.verdict, AnalysisReport::Verdict::Violated);
  EXPECT_EQ(keys(r), golden_lines("hospital_doctor_edit.cex"));
  for (const auto& q : r.counterexamples) EXPECT_EQ(eval_root(tree, q).decision, Decision::Permit);
}

TEST(VerifyProperty, AlwaysDenyHolds) {
  auto tree = parse_policy("rule r effect deny\npolicy pol target null combine po rules r\n");
  PropertySpec spec{"never_permit", {}, {}, Decision::Permit};
  auto r = verify_property(tree, AttributeDomain{{{"a", {"x", "y"}}}}, spec);
  EXPECT_EQ(r.verdict, AnalysisReport::Verdict::Holds);
  EXPECT_TRUE(r.counterexamples.empty());
}

TEST(CrossCheck, HospitalRequestPasses) {
  auto tree = load_tree("hospital/hospital.pol");
  auto q = parse_request(slurp(XASP_DATA_DIR "/hospital/q1.req"));
  auto r = cross_check(tree, q);
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_TRUE(r.acyclic);
  EXPECT_EQ(r.answer_sets, 1u);
  EXPECT_EQ(r.direct, Decision::Permit);
  EXPECT_EQ(r.compiled, "p");
}

// ASP and enumeration agree on random trees over small domains.
TEST(AnalysisProperty, RandomTreesAgree) {
  std::mt19937_64 rng(61);
  AttributeDomain dom;
  for (const auto& c : testing::pool_categories()) dom.values[c] = {"x1", "x2"};
  for (int i = 0; i < 25; ++i) {
    auto tree = testing::random_tree(rng);
    auto r = check_gap(tree, dom, {.with_errors = i % 5 == 0});
    EXPECT_FALSE(r.mismatch) << *r.mismatch;
    PropertySpec spec{"any_permit", {}, {}, Decision::Permit};
    auto v = verify_property(tree, dom, spec);
    EXPECT_FALSE(v.mismatch) << *v.mismatch;
  }
}

}  // namespace
}  // namespace xasp
