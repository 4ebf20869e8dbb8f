#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xasp/asp/ground.hpp"

namespace xasp::asp {

/// A set of atoms of one ground program.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::size_t universe) : bits_(universe, false) {}

  bool contains(AtomId id) const { return id < bits_.size() && bits_[id]; }
  void insert(AtomId id);
  void erase(AtomId id) {
    if (id < bits_.size()) bits_[id] = false;
  }

  std::size_t size() const;
  std::vector<AtomId> atoms() const;

  bool subset_of(const Interpretation& other) const;
  bool operator==(const Interpretation& other) const;

 private:
  std::vector<bool> bits_;
};

/// Positive program Π^I: rules with a negated atom in `i` are dropped, the
/// negations of the others are stripped. Constraints stay as constraints.
std::vector<GroundRule> reduct(const GroundProgram& gp, const Interpretation& i);

struct LeastModel {
  Interpretation model;
  bool constraint_violated = false;
};

/// T_P fixpoint of a positive program; `neg` bodies are ignored.
LeastModel least_model(const std::vector<GroundRule>& positive, std::size_t atom_count);

/// Each choice has exactly one element in `i`; with those elements added as
/// facts, `i` is the least model of the reduct and satisfies every
/// constraint.
bool is_answer_set(const GroundProgram& gp, const Interpretation& i);

struct Acyclicity {
  bool acyclic = false;
  /// Level mapping (1-based) when acyclic: level[head] > level[body atom].
  std::vector<unsigned> level;
  /// Atoms in dependency order when acyclic.
  std::vector<AtomId> order;
};

/// Dependency graph: an edge from every body atom (positive or negative)
/// to the head. Constraints and choices add no edges.
Acyclicity check_acyclic(const GroundProgram& gp);

struct SolveOptions {
  /// Largest number of candidate atoms for the exhaustive fallback.
  std::size_t bruteforce_cap = 20;
};

class SolveError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Answer sets of an acyclic program, one choice selection at a time.
class SelectionSolver {
 public:
  /// Throws SolveError when the program is not acyclic.
  explicit SelectionSolver(const GroundProgram& gp);

  /// Index into each choice's element list.
  using Selection = std::vector<std::size_t>;

  /// The unique answer set containing exactly the selected elements, if any.
  std::optional<Interpretation> solve(const Selection& selection) const;

  /// Number of selections; saturates at SIZE_MAX.
  std::size_t selection_count() const;

  /// Lexicographic successor; false after the last selection.
  bool next(Selection& selection) const;

  const Acyclicity& acyclicity() const noexcept { return acyclicity_; }

 private:
  const GroundProgram& gp_;
  Acyclicity acyclicity_;
  std::vector<std::vector<std::size_t>> rules_by_head_;
  std::vector<std::size_t> constraints_;
};

/// All answer sets in canonical order: the acyclic path when possible,
/// otherwise the exhaustive fallback (throws SolveError above the cap).
std::vector<Interpretation> answer_sets(const GroundProgram& gp, const SolveOptions& options = {});

/// Tests every subset of the atoms that occur as a head or choice element.
std::vector<Interpretation> answer_sets_bruteforce(const GroundProgram& gp,
                                                   const SolveOptions& options = {});

/// Sorted atom texts.
std::vector<std::string> atom_texts(const GroundProgram& gp, const Interpretation& i);

/// Orders by atom_texts lexicographically and removes duplicates.
void canonicalize(const GroundProgram& gp, std::vector<Interpretation>& sets);

struct Solution {
  GroundProgram ground;
  bool acyclic = false;
  std::vector<Interpretation> answer_sets;
};

Solution solve(const Program& program, const SolveOptions& options = {});

}  // namespace xasp::asp
