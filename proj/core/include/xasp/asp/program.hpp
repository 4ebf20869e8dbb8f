#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xasp/asp/term.hpp"
#include "xasp/error.hpp"

namespace xasp::asp {

enum class CmpOp { Eq, Neq };

struct Positive {
  Atom atom;
  bool operator==(const Positive&) const = default;
};

/// `not atom` (negation as failure).
struct Negative {
  Atom atom;
  bool operator==(const Negative&) const = default;
};

/// Syntactic (in)equality of terms, evaluated during grounding.
struct Comparison {
  Term lhs;
  CmpOp op = CmpOp::Neq;
  Term rhs;
  bool operator==(const Comparison&) const = default;
};

using Literal = std::variant<Positive, Negative, Comparison>;

/// `head :- body.`; no head makes it a constraint, no body a fact.
/// Literal order is kept as written.
struct NormalRule {
  std::optional<Atom> head;
  std::vector<Literal> body;

  static NormalRule fact(Atom head) { return {std::move(head), {}}; }

  bool is_fact() const noexcept { return head.has_value() && body.empty(); }
  bool is_constraint() const noexcept { return !head.has_value(); }

  std::vector<const Atom*> positive_atoms() const;
  std::vector<const Atom*> negative_atoms() const;
  std::vector<const Comparison*> comparisons() const;

  bool operator==(const NormalRule&) const = default;
};

/// `1 { chosen(X) : domain(X) } 1.` Exactly one instance is true.
struct ChoiceRule {
  Atom chosen;
  Atom domain;
  bool operator==(const ChoiceRule&) const = default;
};

struct Program {
  /// Comment line emitted before rules[first_rule]. Not semantic.
  struct Section {
    std::size_t first_rule;
    std::string title;
  };

  std::vector<NormalRule> rules;
  std::vector<ChoiceRule> choices;
  std::vector<Section> sections;

  void add(NormalRule rule) { rules.push_back(std::move(rule)); }
  void add(ChoiceRule choice) { choices.push_back(std::move(choice)); }
  void begin_section(std::string title) { sections.push_back({rules.size(), std::move(title)}); }
  void append(const Program& other);

  /// Structural equality; sections are ignored.
  bool operator==(const Program& other) const {
    return rules == other.rules && choices == other.choices;
  }
};

class UnsafeRule : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Variables of the head, negative literals and comparisons that are not
/// bound by a positive body atom.
std::vector<std::string> unsafe_variables(const NormalRule& rule);

/// Throws UnsafeRule for an unsafe rule or a malformed choice, and
/// InvalidInput when a predicate is used with two different arities.
void check_program(const Program& program);

}  // namespace xasp::asp
