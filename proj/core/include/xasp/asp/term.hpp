#pragma once

#include <compare>
#include <string>
#include <vector>

namespace xasp::asp {

/// Constant (lowercase identifier or integer), variable (uppercase-initial)
/// or compound `f(t1,...,tn)`.
class Term {
 public:
  enum class Kind { Constant, Variable, Compound };

  Term() = default;

  static Term constant(std::string name) { return Term(Kind::Constant, std::move(name), {}); }
  static Term variable(std::string name) { return Term(Kind::Variable, std::move(name), {}); }
  static Term compound(std::string functor, std::vector<Term> args) {
    return Term(Kind::Compound, std::move(functor), std::move(args));
  }

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Term>& args() const noexcept { return args_; }

  bool is_variable() const noexcept { return kind_ == Kind::Variable; }
  bool is_ground() const;
  void collect_variables(std::vector<std::string>& out) const;

  std::string to_string() const;

  std::strong_ordering operator<=>(const Term& other) const;
  bool operator==(const Term&) const = default;

 private:
  Term(Kind kind, std::string name, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_ = Kind::Constant;
  std::string name_;
  std::vector<Term> args_;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  Atom() = default;
  Atom(std::string pred, std::vector<Term> arguments = {})
      : predicate(std::move(pred)), args(std::move(arguments)) {}

  bool is_ground() const;
  void collect_variables(std::vector<std::string>& out) const;
  std::string to_string() const;

  std::strong_ordering operator<=>(const Atom& other) const;
  bool operator==(const Atom&) const = default;
};

// Shorthands used by the program builders.
inline Term cst(std::string name) { return Term::constant(std::move(name)); }
inline Term var(std::string name) { return Term::variable(std::move(name)); }

}  // namespace xasp::asp
