#include <gtest/gtest.h>

#include <random>

#include "random_policy.hpp"
#include "xasp/condition.hpp"
#include "xasp/error.hpp"

namespace xasp {
namespace {

const char* kSameId = "patient_id(X) & patient_record_id(X)";

TEST(Condition, OwnRecordIsTrue) {
  auto q = Request::make({{"patient_id", "roberta"}, {"patient_record_id", "roberta"}});
  EXPECT_EQ(eval_condition(parse_condition(kSameId), q), CondVal::True);
}

TEST(Condition, TrueConditionIsTrue) {
  auto q = Request::make({{"subject", "doctor"}}, {{"action", "read"}});
  EXPECT_EQ(eval_condition(Condition::always_true(), q), CondVal::True);
  EXPECT_TRUE(parse_condition("true").is_true());
}

TEST(Condition, RelevantErrorWithoutWitnessIsIndeterminate) {
  auto q = Request::make({{"patient_record_id", "roberta"}}, {{"patient_id", "roberto"}});
  EXPECT_EQ(eval_condition(parse_condition(kSameId), q), CondVal::Indeterminate);
}

TEST(Condition, ErrorMarkedWitnessDoesNotCount) {
  auto q = Request::make({{"patient_record_id", "roberta"}, {"patient_id", "alice"}},
                         {{"patient_id", "roberta"}});
  EXPECT_EQ(eval_condition(parse_condition(kSameId), q), CondVal::Indeterminate);
}

TEST(Condition, WitnessBeatsUnrelatedError) {
  auto q = Request::make({{"patient_id", "roberta"}, {"patient_record_id", "roberta"}},
                         {{"patient_id", "roberto"}});
  EXPECT_EQ(eval_condition(parse_condition(kSameId), q), CondVal::True);
}

TEST(Condition, IrrelevantErrorGivesFalse) {
  auto q = Request::make({{"patient_id", "a"}, {"patient_record_id", "b"}}, {{"subject", "x"}});
  EXPECT_EQ(eval_condition(parse_condition(kSameId), q), CondVal::False);
}

TEST(Condition, Disequality) {
  auto c = parse_condition("owner(X) & user(Y) & X != Y");
  EXPECT_EQ(eval_condition(c, Request::make({{"owner", "a"}, {"user", "a"}})), CondVal::False);
  EXPECT_EQ(eval_condition(c, Request::make({{"owner", "a"}, {"user", "b"}})), CondVal::True);
  auto k = parse_condition("owner(X) & X != a");
  EXPECT_EQ(eval_condition(k, Request::make({{"owner", "a"}})), CondVal::False);
  EXPECT_EQ(eval_condition(k, Request::make({{"owner", "a"}, {"owner", "b"}})), CondVal::True);
}

TEST(Condition, RelevantCategories) {
  EXPECT_EQ(relevant_categories(parse_condition(kSameId)),
            (std::set<std::string>{"patient_id", "patient_record_id"}));
  EXPECT_TRUE(relevant_categories(Condition::always_true()).empty());
  EXPECT_EQ(relevant_categories(parse_condition("subject(doctor) & subject(doctor)")),
            (std::set<std::string>{"subject"}));
}

TEST(Condition, ParseShapes) {
  auto c = parse_condition(kSameId);
  ASSERT_FALSE(c.is_true());
  EXPECT_EQ(c.expr().items.size(), 2u);
  EXPECT_EQ(variables(c.expr()), std::vector<std::string>{"X"});
  EXPECT_EQ(parse_condition(to_string(c)), c);
}

TEST(Condition, ParseErrors) {
  EXPECT_THROW(parse_condition("X != Y"), InvalidInput);
  EXPECT_THROW(parse_condition("owner(X) & X != Y"), InvalidInput);
  EXPECT_THROW(parse_condition("owner(X) &"), ParseError);
  EXPECT_THROW(parse_condition("owner X"), ParseError);
  EXPECT_THROW(parse_condition(""), ParseError);
}

// Removing error marks only ever resolves idt; it never flips t and f.
TEST(ConditionProperty, ErrorsOnlyProduceIndeterminate) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 400; ++i) {
    PolicyTree tree = testing::random_tree(rng, {.true_condition = 0.0});
    Request q = testing::random_request(rng, 1.0);
    std::set<AttributeAtom> cleared = q.atoms();
    if (cleared.empty()) continue;
    Request clean = Request::make(cleared);
    for (const auto& r : tree.rules()) {
      CondVal with = eval_condition(r.condition, q);
      CondVal without = eval_condition(r.condition, clean);
      EXPECT_NE(without, CondVal::Indeterminate);
      if (with != CondVal::Indeterminate) EXPECT_EQ(with, without) << to_string(r.condition);
    }
  }
}

}  // namespace
}  // namespace xasp
