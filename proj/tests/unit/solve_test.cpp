#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "random_program.hpp"
#include "xasp/asp/ground.hpp"
#include "xasp/asp/solve.hpp"
#include "xasp/asp/text.hpp"

namespace xasp::asp {
namespace {

using xasp::testing::AtomTextSet;

std::set<AtomTextSet> solve_text(std::string_view text) {
  auto gp = ground(parse_program(text));
  return xasp::testing::as_text_sets(gp, answer_sets(gp));
}

Interpretation interp(const GroundProgram& gp, std::initializer_list<std::string_view> atoms) {
  Interpretation i(gp.atom_count());
  for (auto a : atoms) i.insert(*gp.find(a));
  return i;
}

// {p <- true; p <- q}, built directly so that q is part of the base.
GroundProgram p_or_q() {
  GroundProgram gp;
  const AtomId p = gp.intern(Atom("p"));
  const AtomId q = gp.intern(Atom("q"));
  gp.add_rule({p, {}, {}});
  gp.add_rule({p, {q}, {}});
  return gp;
}

TEST(Reduct, DropsAndStrips) {
  auto gp = ground(parse_program("a :- not b.\nb :- c, not a.\nc.\n"));
  auto r = reduct(gp, interp(gp, {"a", "c"}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(r[0].pos.empty() && r[0].neg.empty());
  auto pq = p_or_q();
  EXPECT_EQ(reduct(pq, interp(pq, {"p"})), pq.rules());
  auto self = ground(parse_program("a :- not a.\n"));
  EXPECT_TRUE(reduct(self, interp(self, {"a"})).empty());
}

TEST(LeastModel, Examples) {
  auto chain = ground(parse_program("a.\nb :- a.\n"));
  EXPECT_EQ(least_model(chain.rules(), chain.atom_count()).model, interp(chain, {"a", "b"}));
  auto loop = ground(parse_program("a :- b.\nb :- a.\n"));
  EXPECT_EQ(least_model(loop.rules(), loop.atom_count()).model.size(), 0u);
  auto pq = p_or_q();
  EXPECT_EQ(least_model(pq.rules(), pq.atom_count()).model, interp(pq, {"p"}));
  auto c = ground(parse_program("a.\n:- a.\n"));
  EXPECT_TRUE(least_model(c.rules(), c.atom_count()).constraint_violated);
}

TEST(IsAnswerSet, Examples) {
  auto gp = ground(parse_program("a :- not b.\n"));
  EXPECT_TRUE(is_answer_set(gp, interp(gp, {"a"})));
  auto self = ground(parse_program("a :- not a.\n"));
  EXPECT_FALSE(is_answer_set(self, interp(self, {"a"})));
  EXPECT_FALSE(is_answer_set(self, Interpretation(self.atom_count())));
  auto pq = p_or_q();
  EXPECT_TRUE(is_answer_set(pq, interp(pq, {"p"})));
  EXPECT_FALSE(is_answer_set(pq, interp(pq, {"p", "q"})));
}

TEST(AnswerSets, Examples) {
  EXPECT_TRUE(solve_text("a :- not a.\n").empty());
  EXPECT_EQ(solve_text("a :- not b.\nb :- not a.\n"),
            (std::set<AtomTextSet>{{"a"}, {"b"}}));
  EXPECT_TRUE(solve_text(":- not gap.\n").empty());
  auto gen = solve_text("subject_db(doctor).\nsubject_db(nurse).\n1 { subject(X) : subject_db(X) } 1.\n");
  EXPECT_EQ(gen.size(), 2u);
}

TEST(AnswerSets, CanonicalOrder) {
  auto gp = ground(parse_program("b :- not a.\na :- not b.\nc :- not d.\nd :- not c.\n"));
  auto sets = answer_sets(gp);
  ASSERT_EQ(sets.size(), 4u);
  EXPECT_EQ(atom_texts(gp, sets[0]), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(atom_texts(gp, sets[3]), (std::vector<std::string>{"b", "d"}));
}

TEST(AnswerSets, BruteforceCap) {
  std::string text;
  for (int i = 0; i < 11; ++i) {
    text += "a" + std::to_string(i) + " :- not b" + std::to_string(i) + ".\n";
    text += "b" + std::to_string(i) + " :- not a" + std::to_string(i) + ".\n";
  }
  auto gp = ground(parse_program(text));
  EXPECT_THROW(answer_sets(gp), SolveError);
  EXPECT_EQ(answer_sets(gp, {.bruteforce_cap = 22}).size(), 2048u);
}

TEST(Acyclicity, Examples) {
  auto self = ground(parse_program("a :- not a.\n"));
  EXPECT_FALSE(check_acyclic(self).acyclic);
  auto gp = ground(parse_program("a :- b.\nb.\n"));
  auto ac = check_acyclic(gp);
  ASSERT_TRUE(ac.acyclic);
  EXPECT_EQ(ac.level[*gp.find("b")], 1u);
  EXPECT_EQ(ac.level[*gp.find("a")], 2u);
  EXPECT_THROW(SelectionSolver{self}, SolveError);
}

TEST(SelectionSolver, EnumeratesSelections) {
  auto gp = ground(parse_program(
      "1 { s(X) : s_db(X) } 1.\n1 { a(X) : a_db(X) } 1.\n"
      "s_db(x).\ns_db(y).\na_db(u).\na_db(v).\na_db(w).\nok :- s(x), a(v).\n:- s(y), a(w).\n"));
  SelectionSolver solver(gp);
  EXPECT_EQ(solver.selection_count(), 6u);
  SelectionSolver::Selection sel(2, 0);
  std::size_t found = 0;
  do {
    if (solver.solve(sel)) ++found;
  } while (solver.next(sel));
  EXPECT_EQ(found, 5u);
}

void check_sets(const GroundProgram& gp, const std::vector<Interpretation>& sets) {
  for (const auto& m : sets) {
    EXPECT_TRUE(xasp::testing::closed_under_rules(gp, m));
    EXPECT_TRUE(xasp::testing::supported(gp, m));
    EXPECT_TRUE(xasp::testing::minimal(gp, m));
  }
}

TEST(SolveProperty, MatchesBruteforceAndOracle) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    xasp::testing::PropositionalShape shape;
    shape.atoms = 3 + i % 8;
    shape.rules = 2 + i % 12;
    shape.acyclic = i % 3 == 0;
    shape.with_choice = i % 4 == 1;
    Program p = xasp::testing::random_propositional(rng, shape);
    auto gp = ground(p);
    auto fast = answer_sets(gp);
    auto brute = answer_sets_bruteforce(gp);
    EXPECT_EQ(xasp::testing::as_text_sets(gp, fast), xasp::testing::as_text_sets(gp, brute)) << emit_text(p);
    EXPECT_EQ(xasp::testing::as_text_sets(gp, fast), xasp::testing::oracle_answer_sets(gp)) << emit_text(p);
    check_sets(gp, fast);
    if (check_acyclic(gp).acyclic && gp.choices().empty()) EXPECT_LE(fast.size(), 1u);
  }
}

TEST(SolveProperty, AcyclicWithoutConstraintsHasOneAnswerSet) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    Program p = xasp::testing::random_propositional(rng, {.atoms = 10, .rules = 14, .acyclic = true,
                                                          .constraint = 0.0});
    auto gp = ground(p);
    ASSERT_TRUE(check_acyclic(gp).acyclic);
    EXPECT_EQ(answer_sets(gp).size(), 1u);
  }
}

}  // namespace
}  // namespace xasp::asp
