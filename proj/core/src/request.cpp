#include "xasp/request.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "xasp/error.hpp"

namespace xasp {

namespace {

bool word_tail(std::string_view text) {
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

AttributeAtom parse_plain_atom(detail::Lexer& lexer) {
  auto category = lexer.expect(detail::TokenKind::Identifier, "a category");
  lexer.expect_punct("(");
  auto value = lexer.expect(detail::TokenKind::Identifier, "an attribute value");
  lexer.expect_punct(")");
  return {category.text, value.text};
}

}  // namespace

bool is_identifier(std::string_view text) {
  return !text.empty() && text.front() >= 'a' && text.front() <= 'z' && word_tail(text);
}

bool is_variable_name(std::string_view text) {
  return !text.empty() && text.front() >= 'A' && text.front() <= 'Z' && word_tail(text);
}

std::string AttributeAtom::to_string() const { return category + "(" + value + ")"; }

Request Request::make(std::set<AttributeAtom> atoms, std::set<AttributeAtom> errors) {
  if (atoms.empty() && errors.empty()) throw InvalidInput("request must contain at least one atom");
  for (const auto* set : {&atoms, &errors}) {
    for (const auto& a : *set) {
      if (!is_identifier(a.category) || !is_identifier(a.value)) {
        throw InvalidInput("malformed attribute atom " + a.to_string());
      }
    }
  }
  for (const auto& a : errors) {
    if (atoms.contains(a)) {
      throw InvalidInput("atom " + a.to_string() + " is both asserted and error-marked");
    }
  }
  return Request(std::move(atoms), std::move(errors));
}

bool Request::has_error_in(std::string_view category) const {
  auto it = errors_.lower_bound(AttributeAtom{std::string(category), ""});
  return it != errors_.end() && it->category == category;
}

std::vector<std::string> Request::canonical_atoms() const {
  std::vector<std::string> out;
  out.reserve(atoms_.size() + errors_.size());
  for (const auto& a : atoms_) out.push_back(a.to_string());
  for (const auto& a : errors_) out.push_back("error(" + a.to_string() + ")");
  std::sort(out.begin(), out.end());
  return out;
}

std::string Request::key() const {
  std::string out;
  for (const auto& s : canonical_atoms()) {
    if (!out.empty()) out += ',';
    out += s;
  }
  return out;
}

Request parse_request(std::string_view text) {
  std::set<AttributeAtom> atoms;
  std::set<AttributeAtom> errors;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    detail::Lexer lexer(text.substr(start, end - start), '#', line_no);
    if (!lexer.at_end()) {
      bool is_error = lexer.peek().is_word("error");
      AttributeAtom atom;
      if (is_error) {
        lexer.next();
        lexer.expect_punct("(");
        atom = parse_plain_atom(lexer);
        lexer.expect_punct(")");
      } else {
        atom = parse_plain_atom(lexer);
      }
      if (!lexer.at_end()) lexer.fail("expected end of line");
      auto& own = is_error ? errors : atoms;
      auto& other = is_error ? atoms : errors;
      if (other.contains(atom)) {
        throw ParseError("atom " + atom.to_string() + " is both asserted and error-marked", line_no,
                         1);
      }
      own.insert(std::move(atom));
    }
    if (end == text.size()) break;
    start = end + 1;
    ++line_no;
  }
  if (atoms.empty() && errors.empty()) throw ParseError("request must contain at least one atom", 0, 0);
  return Request::make(std::move(atoms), std::move(errors));
}

std::string print_request(const Request& request) {
  std::string out;
  for (const auto& a : request.atoms()) out += a.to_string() + "\n";
  for (const auto& a : request.errors()) out += "error(" + a.to_string() + ")\n";
  return out;
}

}  // namespace xasp
