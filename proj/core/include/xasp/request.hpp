#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace xasp {

/// Letters, digits and underscores, starting with a lowercase letter.
bool is_identifier(std::string_view text);

/// Same alphabet, starting with an uppercase letter.
bool is_variable_name(std::string_view text);

/// `category(value)`; a Match is exactly one of these.
struct AttributeAtom {
  std::string category;
  std::string value;

  std::string to_string() const;

  auto operator<=>(const AttributeAtom&) const = default;
  bool operator==(const AttributeAtom&) const = default;
};

/// A set of asserted attribute atoms plus a set of error-marked ones.
/// An atom is never both asserted and error-marked, and a request is never
/// empty. Immutable after construction.
class Request {
 public:
  /// Throws InvalidInput when the invariants above do not hold or an atom
  /// carries a malformed identifier.
  static Request make(std::set<AttributeAtom> atoms, std::set<AttributeAtom> errors = {});

  const std::set<AttributeAtom>& atoms() const noexcept { return atoms_; }
  const std::set<AttributeAtom>& errors() const noexcept { return errors_; }

  bool asserts(const AttributeAtom& atom) const { return atoms_.contains(atom); }
  bool has_error(const AttributeAtom& atom) const { return errors_.contains(atom); }
  bool has_error_in(std::string_view category) const;

  /// All elements as text (`cat(v)` / `error(cat(v))`), sorted.
  std::vector<std::string> canonical_atoms() const;

  /// canonical_atoms() joined with ','. Used as the report and sort key.
  std::string key() const;

  bool operator==(const Request&) const = default;

 private:
  Request(std::set<AttributeAtom> atoms, std::set<AttributeAtom> errors)
      : atoms_(std::move(atoms)), errors_(std::move(errors)) {}

  std::set<AttributeAtom> atoms_;
  std::set<AttributeAtom> errors_;
};

/// One atom per line: `cat(value)` or `error(cat(value))`; `#` comments.
Request parse_request(std::string_view text);
std::string print_request(const Request& request);

}  // namespace xasp
