#include "xasp/asp/ground.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace xasp::asp {

AtomId GroundProgram::intern(const Atom& atom) {
  std::string key = atom.to_string();
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  if (!atom.is_ground()) throw InvalidInput("cannot intern non-ground atom " + key);
  const auto id = static_cast<AtomId>(atoms_.size());
  atoms_.push_back(atom);
  texts_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<AtomId> GroundProgram::find(std::string_view text) const {
  auto it = ids_.find(std::string(text));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::string GroundProgram::to_text() const {
  std::ostringstream out;
  for (const auto& c : choices_) {
    out << "1 {";
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
      out << (i == 0 ? " " : "; ") << texts_[c.elements[i]];
    }
    out << " } 1.\n";
  }
  for (const auto& r : rules_) {
    if (!r.is_constraint()) out << texts_[r.head];
    if (!r.pos.empty() || !r.neg.empty()) {
      out << (r.is_constraint() ? ":- " : " :- ");
      bool first = true;
      for (AtomId a : r.pos) {
        out << (first ? "" : ", ") << texts_[a];
        first = false;
      }
      for (AtomId a : r.neg) {
        out << (first ? "not " : ", not ") << texts_[a];
        first = false;
      }
    }
    out << ".\n";
  }
  return out.str();
}

namespace {

using Binding = std::vector<std::pair<const std::string*, const Term*>>;

const Term* lookup(const Binding& b, const std::string& name) {
  for (const auto& [n, t] : b) {
    if (*n == name) return t;
  }
  return nullptr;
}

bool match(const Term& pattern, const Term& ground, Binding& b) {
  switch (pattern.kind()) {
    case Term::Kind::Variable:
      if (const Term* bound = lookup(b, pattern.name())) return *bound == ground;
      b.emplace_back(&pattern.name(), &ground);
      return true;
    case Term::Kind::Constant:
      return ground.kind() == Term::Kind::Constant && ground.name() == pattern.name();
    case Term::Kind::Compound:
      if (ground.kind() != Term::Kind::Compound || ground.name() != pattern.name() ||
          ground.args().size() != pattern.args().size()) {
        return false;
      }
      for (std::size_t i = 0; i < pattern.args().size(); ++i) {
        if (!match(pattern.args()[i], ground.args()[i], b)) return false;
      }
      return true;
  }
  return false;
}

Term substitute(const Term& t, const Binding& b) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      const Term* bound = lookup(b, t.name());
      if (bound == nullptr) throw InvalidInput("unbound variable " + t.name());
      return *bound;
    }
    case Term::Kind::Constant:
      return t;
    case Term::Kind::Compound: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute(a, b));
      return Term::compound(t.name(), std::move(args));
    }
  }
  return t;
}

Atom substitute(const Atom& a, const Binding& b) {
  Atom out(a.predicate);
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(substitute(t, b));
  return out;
}

// Returns the ground first argument under `b`, if any.
std::optional<std::string> first_arg_key(const Atom& pattern, const Binding& b) {
  if (pattern.args.empty()) return std::nullopt;
  const Term& first = pattern.args.front();
  if (first.kind() == Term::Kind::Constant) return first.name();
  if (first.kind() == Term::Kind::Variable) {
    if (const Term* bound = lookup(b, first.name())) return bound->to_string();
    return std::nullopt;
  }
  if (first.is_ground()) return first.to_string();
  return std::nullopt;
}

class Grounder {
 public:
  Grounder(const Program& program, GroundProgram& out) : program_(program), out_(out) {}

  void run() {
    check_program(program_);
    check_choice_domains();
    for (const auto& rule : program_.rules) {
      if (rule.positive_atoms().empty()) instantiate(rule, {});
    }
    for (const auto& choice : program_.choices) expand(choice);
    // Semi-naive rounds: atoms stamped `round` form the delta of round+1.
    for (unsigned round = 1; frontier_nonempty(round - 1); ++round) {
      round_ = round;
      for (const auto& rule : program_.rules) {
        const auto pos = rule.positive_atoms();
        for (std::size_t d = 0; d < pos.size(); ++d) {
          Binding b;
          join(rule, pos, 0, d, b);
        }
      }
    }
  }

 private:
  struct PredicateIndex {
    std::vector<AtomId> all;
    std::unordered_map<std::string, std::vector<AtomId>> by_first;
  };

  void check_choice_domains() {
    for (const auto& choice : program_.choices) {
      for (const auto& rule : program_.rules) {
        if (rule.head && rule.head->predicate == choice.domain.predicate && !rule.is_fact()) {
          throw InvalidInput("choice domain " + choice.domain.predicate +
                             " must be defined by facts only");
        }
      }
    }
  }

  bool frontier_nonempty(unsigned stamp) const {
    return std::any_of(stamp_.begin(), stamp_.end(),
                       [stamp](unsigned s) { return s == stamp; });
  }

  void derive(AtomId id) {
    if (id >= stamp_.size()) stamp_.resize(out_.atom_count(), kUnderived);
    if (stamp_[id] != kUnderived) return;
    stamp_[id] = round_;
    const Atom& a = out_.atom(id);
    auto& idx = index_[a.predicate];
    idx.all.push_back(id);
    if (!a.args.empty()) idx.by_first[a.args.front().to_string()].push_back(id);
  }

  void expand(const ChoiceRule& choice) {
    GroundChoice g;
    for (const auto& rule : program_.rules) {
      if (!rule.is_fact() || rule.head->predicate != choice.domain.predicate) continue;
      Binding b;
      if (!match_atom(choice.domain, *rule.head, b)) continue;
      const AtomId id = out_.intern(substitute(choice.chosen, b));
      if (std::find(g.elements.begin(), g.elements.end(), id) == g.elements.end()) {
        g.elements.push_back(id);
        derive(id);
      }
    }
    out_.add_choice(std::move(g));
  }

  static bool match_atom(const Atom& pattern, const Atom& ground, Binding& b) {
    if (pattern.predicate != ground.predicate || pattern.args.size() != ground.args.size()) {
      return false;
    }
    for (std::size_t i = 0; i < pattern.args.size(); ++i) {
      if (!match(pattern.args[i], ground.args[i], b)) return false;
    }
    return true;
  }

  // Position i < d draws from atoms older than the delta, i == d from the
  // delta, i > d from everything derived before this round.
  void join(const NormalRule& rule, const std::vector<const Atom*>& pos, std::size_t i,
            std::size_t d, Binding& b) {
    if (i == pos.size()) {
      instantiate(rule, b);
      return;
    }
    const Atom& pattern = *pos[i];
    auto pit = index_.find(pattern.predicate);
    if (pit == index_.end()) return;
    const std::vector<AtomId>* candidates = &pit->second.all;
    if (auto key = first_arg_key(pattern, b)) {
      auto kit = pit->second.by_first.find(*key);
      if (kit == pit->second.by_first.end()) return;
      candidates = &kit->second;
    }
    const unsigned delta = round_ - 1;
    // Candidates may grow while we recurse; only the prefix present now counts.
    const std::size_t n = candidates->size();
    for (std::size_t k = 0; k < n; ++k) {
      const AtomId id = (*candidates)[k];
      const unsigned s = stamp_[id];
      if (i < d ? s >= delta : i == d ? s != delta : s > delta) continue;
      const std::size_t mark = b.size();
      if (match_atom(pattern, out_.atom(id), b)) join(rule, pos, i + 1, d, b);
      b.resize(mark);
    }
  }

  void instantiate(const NormalRule& rule, const Binding& b) {
    for (const Comparison* c : rule.comparisons()) {
      const bool equal = substitute(c->lhs, b) == substitute(c->rhs, b);
      if (equal != (c->op == CmpOp::Eq)) return;
    }
    GroundRule g;
    if (rule.head) g.head = out_.intern(substitute(*rule.head, b));
    for (const Atom* a : rule.positive_atoms()) g.pos.push_back(out_.intern(substitute(*a, b)));
    for (const Atom* a : rule.negative_atoms()) g.neg.push_back(out_.intern(substitute(*a, b)));
    std::vector<AtomId> key;
    key.reserve(g.pos.size() + g.neg.size() + 2);
    key.push_back(g.head);
    key.insert(key.end(), g.pos.begin(), g.pos.end());
    key.push_back(kNoAtom);
    key.insert(key.end(), g.neg.begin(), g.neg.end());
    if (!seen_.insert(std::move(key)).second) return;
    if (!g.is_constraint()) derive(g.head);
    out_.add_rule(std::move(g));
  }

  static constexpr unsigned kUnderived = std::numeric_limits<unsigned>::max();

  const Program& program_;
  GroundProgram& out_;
  unsigned round_ = 0;
  std::vector<unsigned> stamp_;
  std::unordered_map<std::string, PredicateIndex> index_;
  std::set<std::vector<AtomId>> seen_;
};

}  // namespace

GroundProgram ground(const Program& program) {
  GroundProgram out;
  Grounder(program, out).run();
  return out;
}

}  // namespace xasp::asp
