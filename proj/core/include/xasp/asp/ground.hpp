#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "xasp/asp/program.hpp"

namespace xasp::asp {

using AtomId = std::uint32_t;
inline constexpr AtomId kNoAtom = std::numeric_limits<AtomId>::max();

struct GroundRule {
  AtomId head = kNoAtom;  // kNoAtom: constraint
  std::vector<AtomId> pos;
  std::vector<AtomId> neg;

  bool is_constraint() const noexcept { return head == kNoAtom; }
  bool operator==(const GroundRule&) const = default;
};

/// Exactly one of `elements` is true.
struct GroundChoice {
  std::vector<AtomId> elements;
  bool operator==(const GroundChoice&) const = default;
};

class GroundProgram {
 public:
  /// `atom` must be ground.
  AtomId intern(const Atom& atom);
  std::optional<AtomId> find(std::string_view text) const;

  const Atom& atom(AtomId id) const { return atoms_[id]; }
  const std::string& text(AtomId id) const { return texts_[id]; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }

  void add_rule(GroundRule rule) { rules_.push_back(std::move(rule)); }
  void add_choice(GroundChoice choice) { choices_.push_back(std::move(choice)); }

  const std::vector<GroundRule>& rules() const noexcept { return rules_; }
  const std::vector<GroundChoice>& choices() const noexcept { return choices_; }

  /// Text form with every rule ground; choices expand to their element list.
  std::string to_text() const;

 private:
  std::deque<Atom> atoms_;
  std::vector<std::string> texts_;
  std::unordered_map<std::string, AtomId> ids_;
  std::vector<GroundRule> rules_;
  std::vector<GroundChoice> choices_;
};

/// Instantiates every rule over the atoms that can possibly be derived
/// (relevance grounding, ignoring negation). Choices range over the ground
/// facts of their domain predicate, which must be defined by facts only.
/// Throws UnsafeRule / InvalidInput from check_program.
GroundProgram ground(const Program& program);

}  // namespace xasp::asp
