#include "xasp/asp/solve.hpp"

#include <algorithm>
#include <limits>

namespace xasp::asp {

void Interpretation::insert(AtomId id) {
  if (id >= bits_.size()) bits_.resize(id + 1, false);
  bits_[id] = true;
}

std::size_t Interpretation::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<AtomId> Interpretation::atoms() const {
  std::vector<AtomId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<AtomId>(i));
  }
  return out;
}

bool Interpretation::subset_of(const Interpretation& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.contains(static_cast<AtomId>(i))) return false;
  }
  return true;
}

bool Interpretation::operator==(const Interpretation& other) const {
  return subset_of(other) && other.subset_of(*this);
}

std::vector<GroundRule> reduct(const GroundProgram& gp, const Interpretation& i) {
  std::vector<GroundRule> out;
  for (const auto& r : gp.rules()) {
    if (std::any_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return i.contains(a); })) continue;
    out.push_back(GroundRule{r.head, r.pos, {}});
  }
  return out;
}

LeastModel least_model(const std::vector<GroundRule>& positive, std::size_t atom_count) {
  LeastModel result{Interpretation(atom_count), false};
  std::vector<std::vector<std::size_t>> watchers(atom_count);
  std::vector<std::size_t> missing(positive.size());
  std::vector<AtomId> queue;
  auto fire = [&](const GroundRule& r) {
    if (r.is_constraint()) {
      result.constraint_violated = true;
    } else if (!result.model.contains(r.head)) {
      result.model.insert(r.head);
      queue.push_back(r.head);
    }
  };
  for (std::size_t k = 0; k < positive.size(); ++k) {
    const auto& r = positive[k];
    missing[k] = r.pos.size();
    for (AtomId a : r.pos) watchers[a].push_back(k);
    if (missing[k] == 0) fire(r);
  }
  while (!queue.empty()) {
    const AtomId a = queue.back();
    queue.pop_back();
    for (std::size_t k : watchers[a]) {
      if (--missing[k] == 0) fire(positive[k]);
    }
  }
  return result;
}

bool is_answer_set(const GroundProgram& gp, const Interpretation& i) {
  auto positive = reduct(gp, i);
  for (const auto& c : gp.choices()) {
    std::size_t chosen = 0;
    for (AtomId e : c.elements) {
      if (i.contains(e)) {
        ++chosen;
        positive.push_back(GroundRule{e, {}, {}});
      }
    }
    if (chosen != 1) return false;
  }
  auto lm = least_model(positive, gp.atom_count());
  return !lm.constraint_violated && lm.model == i;
}

Acyclicity check_acyclic(const GroundProgram& gp) {
  const std::size_t n = gp.atom_count();
  std::vector<std::vector<AtomId>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& r : gp.rules()) {
    if (r.is_constraint()) continue;
    for (const auto* body : {&r.pos, &r.neg}) {
      for (AtomId a : *body) {
        succ[a].push_back(r.head);
        ++indegree[r.head];
      }
    }
  }
  Acyclicity out;
  out.level.assign(n, 1);
  std::vector<AtomId> ready;
  for (std::size_t a = 0; a < n; ++a) {
    if (indegree[a] == 0) ready.push_back(static_cast<AtomId>(a));
  }
  // Reverse so that atoms leave the stack in id order.
  std::reverse(ready.begin(), ready.end());
  while (!ready.empty()) {
    const AtomId a = ready.back();
    ready.pop_back();
    out.order.push_back(a);
    for (AtomId h : succ[a]) {
      out.level[h] = std::max(out.level[h], out.level[a] + 1);
      if (--indegree[h] == 0) ready.push_back(h);
    }
  }
  out.acyclic = out.order.size() == n;
  if (!out.acyclic) {
    out.level.clear();
    out.order.clear();
  }
  return out;
}

SelectionSolver::SelectionSolver(const GroundProgram& gp)
    : gp_(gp), acyclicity_(check_acyclic(gp)), rules_by_head_(gp.atom_count()) {
  if (!acyclicity_.acyclic) throw SolveError("program is not acyclic");
  for (std::size_t k = 0; k < gp.rules().size(); ++k) {
    const auto& r = gp.rules()[k];
    if (r.is_constraint()) {
      constraints_.push_back(k);
    } else {
      rules_by_head_[r.head].push_back(k);
    }
  }
}

std::optional<Interpretation> SelectionSolver::solve(const Selection& selection) const {
  const auto& choices = gp_.choices();
  if (selection.size() != choices.size()) throw SolveError("selection size mismatch");
  Interpretation model(gp_.atom_count());
  for (std::size_t c = 0; c < choices.size(); ++c) {
    if (selection[c] >= choices[c].elements.size()) return std::nullopt;
    model.insert(choices[c].elements[selection[c]]);
  }
  auto body_holds = [&](const GroundRule& r) {
    return std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return model.contains(a); }) &&
           std::none_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return model.contains(a); });
  };
  for (AtomId a : acyclicity_.order) {
    if (model.contains(a)) continue;
    for (std::size_t k : rules_by_head_[a]) {
      if (body_holds(gp_.rules()[k])) {
        model.insert(a);
        break;
      }
    }
  }
  for (std::size_t k : constraints_) {
    if (body_holds(gp_.rules()[k])) return std::nullopt;
  }
  if (!is_answer_set(gp_, model)) return std::nullopt;
  return model;
}

std::size_t SelectionSolver::selection_count() const {
  std::size_t total = 1;
  for (const auto& c : gp_.choices()) {
    if (c.elements.empty()) return 0;
    if (total > std::numeric_limits<std::size_t>::max() / c.elements.size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= c.elements.size();
  }
  return total;
}

bool SelectionSolver::next(Selection& selection) const {
  const auto& choices = gp_.choices();
  for (std::size_t c = choices.size(); c-- > 0;) {
    if (++selection[c] < choices[c].elements.size()) return true;
    selection[c] = 0;
  }
  return false;
}

std::vector<Interpretation> answer_sets_bruteforce(const GroundProgram& gp,
                                                   const SolveOptions& options) {
  std::vector<bool> candidate(gp.atom_count(), false);
  for (const auto& r : gp.rules()) {
    if (!r.is_constraint()) candidate[r.head] = true;
  }
  for (const auto& c : gp.choices()) {
    for (AtomId e : c.elements) candidate[e] = true;
  }
  std::vector<AtomId> atoms;
  for (std::size_t a = 0; a < candidate.size(); ++a) {
    if (candidate[a]) atoms.push_back(static_cast<AtomId>(a));
  }
  if (atoms.size() > options.bruteforce_cap) {
    throw SolveError("exhaustive search over " + std::to_string(atoms.size()) +
                     " atoms exceeds the cap of " + std::to_string(options.bruteforce_cap));
  }
  std::vector<Interpretation> out;
  const std::uint64_t subsets = std::uint64_t{1} << atoms.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Interpretation i(gp.atom_count());
    for (std::size_t b = 0; b < atoms.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) i.insert(atoms[b]);
    }
    if (is_answer_set(gp, i)) out.push_back(std::move(i));
  }
  canonicalize(gp, out);
  return out;
}

std::vector<Interpretation> answer_sets(const GroundProgram& gp, const SolveOptions& options) {
  if (!check_acyclic(gp).acyclic) return answer_sets_bruteforce(gp, options);
  SelectionSolver solver(gp);
  std::vector<Interpretation> out;
  if (solver.selection_count() == 0) return out;
  SelectionSolver::Selection selection(gp.choices().size(), 0);
  do {
    if (auto m = solver.solve(selection)) out.push_back(std::move(*m));
  } while (solver.next(selection));
  canonicalize(gp, out);
  return out;
}

std::vector<std::string> atom_texts(const GroundProgram& gp, const Interpretation& i) {
  std::vector<std::string> out;
  for (AtomId a : i.atoms()) out.push_back(gp.text(a));
  std::sort(out.begin(), out.end());
  return out;
}

void canonicalize(const GroundProgram& gp, std::vector<Interpretation>& sets) {
  std::vector<std::pair<std::vector<std::string>, std::size_t>> keyed;
  keyed.reserve(sets.size());
  for (std::size_t k = 0; k < sets.size(); ++k) keyed.emplace_back(atom_texts(gp, sets[k]), k);
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<Interpretation> out;
  out.reserve(keyed.size());
  for (const auto& [texts, k] : keyed) out.push_back(std::move(sets[k]));
  sets = std::move(out);
}

Solution solve(const Program& program, const SolveOptions& options) {
  Solution s;
  s.ground = ground(program);
  s.acyclic = check_acyclic(s.ground).acyclic;
  s.answer_sets = answer_sets(s.ground, options);
  return s;
}

}  // namespace xasp::asp
