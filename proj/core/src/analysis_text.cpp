#include <algorithm>
#include <sstream>

#include "lexer.hpp"
#include "xasp/analysis.hpp"

namespace xasp {

using detail::Lexer;
using detail::TokenKind;

namespace {

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

AttributeAtom attribute(Lexer& lex) {
  AttributeAtom a;
  a.category = lex.expect(TokenKind::Identifier, "attribute category").text;
  lex.expect_punct("(");
  a.value = lex.expect(TokenKind::Identifier, "attribute value").text;
  lex.expect_punct(")");
  return a;
}

}  // namespace

AttributeDomain parse_domain(std::string_view text) {
  AttributeDomain domain;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Lexer lex(lines[i], '#', i + 1);
    if (lex.at_end()) continue;
    const auto category = lex.expect(TokenKind::Identifier, "category name");
    lex.expect_punct(":");
    if (domain.values.contains(category.text)) {
      throw ParseError("category " + category.text + " listed twice", category.line,
                       category.column);
    }
    auto& vals = domain.values[category.text];
    while (!lex.at_end()) {
      const auto v = lex.peek();
      if (!v.is(TokenKind::Identifier) && !v.is(TokenKind::Number)) lex.fail("expected value");
      lex.next();
      if (v.is(TokenKind::Number)) {
        throw ParseError("value " + v.text + " must start with a lowercase letter", v.line,
                         v.column);
      }
      vals.push_back(v.text);
    }
    std::sort(vals.begin(), vals.end());
  }
  domain.check();
  return domain;
}

std::string print_domain(const AttributeDomain& domain) {
  std::ostringstream out;
  for (const auto& [category, vals] : domain.values) {
    out << category << ':';
    for (const auto& v : vals) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

PropertySpec parse_property(std::string_view text) {
  PropertySpec spec;
  bool named = false;
  bool has_violation = false;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Lexer lex(lines[i], '#', i + 1);
    if (lex.at_end()) continue;
    const auto keyword = lex.expect(TokenKind::Identifier, "keyword");
    if (keyword.text == "property") {
      if (named) throw ParseError("property named twice", keyword.line, keyword.column);
      spec.name = lex.expect(TokenKind::Identifier, "property name").text;
      named = true;
    } else if (keyword.text == "include" || keyword.text == "exclude") {
      auto& list = keyword.text == "include" ? spec.include : spec.exclude;
      do {
        list.push_back(attribute(lex));
      } while (!lex.at_end());
    } else if (keyword.text == "violation") {
      const auto t = lex.expect(TokenKind::Identifier, "decision");
      auto d = parse_decision(t.text);
      if (!d) throw ParseError("unknown decision '" + t.text + "'", t.line, t.column);
      spec.violation = *d;
      has_violation = true;
    } else {
      throw ParseError("unknown keyword '" + keyword.text + "'", keyword.line, keyword.column);
    }
    if (!lex.at_end()) lex.fail("expected end of line");
  }
  if (!named) throw ParseError("missing 'property NAME' line", 0, 0);
  if (!has_violation) throw ParseError("missing 'violation DECISION' line", 0, 0);
  for (const auto& a : spec.include) {
    if (std::find(spec.exclude.begin(), spec.exclude.end(), a) != spec.exclude.end()) {
      throw InvalidInput(a.to_string() + " is both included and excluded");
    }
  }
  return spec;
}

std::string print_property(const PropertySpec& spec) {
  std::ostringstream out;
  out << "property " << spec.name << '\n';
  for (const auto& a : spec.include) out << "include " << a.to_string() << '\n';
  if (!spec.exclude.empty()) {
    out << "exclude";
    for (const auto& a : spec.exclude) out << ' ' << a.to_string();
    out << '\n';
  }
  out << "violation " << token(spec.violation) << '\n';
  return out.str();
}

}  // namespace xasp
