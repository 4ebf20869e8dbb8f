#include "xasp/asp/program.hpp"

#include <algorithm>
#include <map>

namespace xasp::asp {

std::vector<const Atom*> NormalRule::positive_atoms() const {
  std::vector<const Atom*> out;
  for (const auto& l : body) {
    if (const auto* p = std::get_if<Positive>(&l)) out.push_back(&p->atom);
  }
  return out;
}

std::vector<const Atom*> NormalRule::negative_atoms() const {
  std::vector<const Atom*> out;
  for (const auto& l : body) {
    if (const auto* n = std::get_if<Negative>(&l)) out.push_back(&n->atom);
  }
  return out;
}

std::vector<const Comparison*> NormalRule::comparisons() const {
  std::vector<const Comparison*> out;
  for (const auto& l : body) {
    if (const auto* c = std::get_if<Comparison>(&l)) out.push_back(c);
  }
  return out;
}

void Program::append(const Program& other) {
  for (const auto& s : other.sections) sections.push_back({rules.size() + s.first_rule, s.title});
  rules.insert(rules.end(), other.rules.begin(), other.rules.end());
  choices.insert(choices.end(), other.choices.begin(), other.choices.end());
}

std::vector<std::string> unsafe_variables(const NormalRule& rule) {
  std::vector<std::string> bound;
  for (const Atom* a : rule.positive_atoms()) a->collect_variables(bound);
  std::vector<std::string> used;
  if (rule.head) rule.head->collect_variables(used);
  for (const Atom* a : rule.negative_atoms()) a->collect_variables(used);
  for (const Comparison* c : rule.comparisons()) {
    c->lhs.collect_variables(used);
    c->rhs.collect_variables(used);
  }
  std::vector<std::string> out;
  for (const auto& v : used) {
    if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.push_back(v);
  }
  return out;
}

namespace {

class ArityChecker {
 public:
  void note(const Atom& a) {
    auto [it, inserted] = arity_.try_emplace(a.predicate, a.args.size());
    if (!inserted && it->second != a.args.size()) {
      throw InvalidInput("predicate " + a.predicate + " used with arities " +
                         std::to_string(it->second) + " and " + std::to_string(a.args.size()));
    }
  }

 private:
  std::map<std::string, std::size_t> arity_;
};

}  // namespace

void check_program(const Program& program) {
  ArityChecker arity;
  for (const auto& rule : program.rules) {
    auto unsafe = unsafe_variables(rule);
    if (!unsafe.empty()) {
      std::string head = rule.head ? rule.head->to_string() : std::string(":-");
      throw UnsafeRule("unsafe variable " + unsafe.front() + " in rule with head " + head);
    }
    if (rule.head) arity.note(*rule.head);
    for (const Atom* a : rule.positive_atoms()) arity.note(*a);
    for (const Atom* a : rule.negative_atoms()) arity.note(*a);
  }
  for (const auto& choice : program.choices) {
    std::vector<std::string> chosen_vars;
    std::vector<std::string> domain_vars;
    choice.chosen.collect_variables(chosen_vars);
    choice.domain.collect_variables(domain_vars);
    if (chosen_vars.size() != 1 || domain_vars != chosen_vars) {
      throw UnsafeRule("choice over " + choice.chosen.to_string() +
                       " must use exactly one variable shared with its domain");
    }
    arity.note(choice.chosen);
    arity.note(choice.domain);
  }
}

}  // namespace xasp::asp
