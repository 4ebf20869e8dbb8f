#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xasp/request.hpp"
#include "xasp/values.hpp"

namespace xasp {

/// A constant or an uppercase-initial variable inside a condition.
struct CondTerm {
  enum class Kind { Constant, Variable };

  Kind kind = Kind::Constant;
  std::string name;

  static CondTerm constant(std::string name) { return {Kind::Constant, std::move(name)}; }
  static CondTerm variable(std::string name) { return {Kind::Variable, std::move(name)}; }
  bool is_variable() const { return kind == Kind::Variable; }

  auto operator<=>(const CondTerm&) const = default;
  bool operator==(const CondTerm&) const = default;
};

/// `category(term)`: holds under a grounding when the request asserts it.
struct PredAtom {
  std::string category;
  CondTerm term;

  bool operator==(const PredAtom&) const = default;
};

/// `lhs != rhs` on ground terms.
struct Diseq {
  CondTerm lhs;
  CondTerm rhs;

  bool operator==(const Diseq&) const = default;
};

using ConditionItem = std::variant<PredAtom, Diseq>;

/// Conjunctive query with disequalities. Every variable of a Diseq occurs in
/// some PredAtom.
struct ConditionExpr {
  std::vector<ConditionItem> items;

  bool operator==(const ConditionExpr&) const = default;
};

/// Either the constant `true` or a conjunctive expression.
class Condition {
 public:
  Condition() = default;
  explicit Condition(ConditionExpr expr);

  static Condition always_true() { return Condition(); }

  bool is_true() const noexcept { return !expr_.has_value(); }
  const ConditionExpr& expr() const { return *expr_; }

  bool operator==(const Condition&) const = default;

 private:
  std::optional<ConditionExpr> expr_;
};

/// Throws InvalidInput if the expression is empty or a Diseq variable is
/// unbound.
void check_safe(const ConditionExpr& expr);

/// Variables in first-occurrence order.
std::vector<std::string> variables(const ConditionExpr& expr);

/// Grammar: `true` | item (`&` item)*, item = `ident(ident|Var)` | `t != t`.
/// Throws ParseError (with column) or InvalidInput (unsafe variable).
Condition parse_condition(std::string_view text);

std::string to_string(const Condition& condition);

/// Categories of the PredAtoms; empty for `true`.
std::set<std::string> relevant_categories(const Condition& condition);

/// t when some grounding over the request's constants satisfies every item
/// without touching an error-marked atom; otherwise idt when a relevant
/// category carries an error mark; otherwise f.
CondVal eval_condition(const Condition& condition, const Request& request);

}  // namespace xasp
