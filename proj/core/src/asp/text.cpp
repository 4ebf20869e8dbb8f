#include "xasp/asp/text.hpp"

#include <sstream>

#include "../lexer.hpp"

namespace xasp::asp {

namespace {

std::string emit_literal(const Literal& lit) {
  struct Visitor {
    std::string operator()(const Positive& p) const { return p.atom.to_string(); }
    std::string operator()(const Negative& n) const { return "not " + n.atom.to_string(); }
    std::string operator()(const Comparison& c) const {
      return c.lhs.to_string() + (c.op == CmpOp::Eq ? " = " : " != ") + c.rhs.to_string();
    }
  };
  return std::visit(Visitor{}, lit);
}

using detail::Lexer;
using detail::TokenKind;

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view text) : lex_(text, '%') {}

  Program parse() {
    Program program;
    while (!lex_.at_end()) statement(program);
    return program;
  }

 private:
  void statement(Program& program) {
    if (lex_.peek().is(TokenKind::Number)) {
      program.add(choice());
      return;
    }
    NormalRule rule;
    if (!lex_.peek().is_punct(":-")) rule.head = atom();
    if (lex_.accept_punct(":-")) {
      rule.body.push_back(literal());
      while (lex_.accept_punct(",")) rule.body.push_back(literal());
    }
    lex_.expect_punct(".");
    program.add(std::move(rule));
  }

  ChoiceRule choice() {
    if (lex_.peek().text != "1") lex_.fail("only exactly-one choice rules are supported");
    lex_.next();
    lex_.expect_punct("{");
    ChoiceRule c;
    c.chosen = atom();
    lex_.expect_punct(":");
    c.domain = atom();
    lex_.expect_punct("}");
    if (lex_.peek().text != "1") lex_.fail("only exactly-one choice rules are supported");
    lex_.next();
    lex_.expect_punct(".");
    return c;
  }

  Literal literal() {
    if (lex_.peek().is_word("not")) {
      lex_.next();
      return Negative{atom()};
    }
    const auto start = lex_.peek();
    Term lhs = term();
    if (lex_.peek().is_punct("=") || lex_.peek().is_punct("!=")) {
      CmpOp op = lex_.next().text == "=" ? CmpOp::Eq : CmpOp::Neq;
      return Comparison{std::move(lhs), op, term()};
    }
    if (lhs.kind() == Term::Kind::Variable || start.is(TokenKind::Number)) {
      throw ParseError("expected atom", start.line, start.column);
    }
    return Positive{Atom(lhs.name(), lhs.args())};
  }

  Atom atom() {
    auto name = lex_.expect(TokenKind::Identifier, "predicate name");
    Atom a(name.text);
    if (lex_.accept_punct("(")) {
      a.args.push_back(term());
      while (lex_.accept_punct(",")) a.args.push_back(term());
      lex_.expect_punct(")");
    }
    return a;
  }

  Term term() {
    const auto& t = lex_.peek();
    if (t.is(TokenKind::Variable)) return Term::variable(lex_.next().text);
    if (t.is(TokenKind::Number)) return Term::constant(lex_.next().text);
    auto name = lex_.expect(TokenKind::Identifier, "term");
    if (!lex_.accept_punct("(")) return Term::constant(name.text);
    std::vector<Term> args{term()};
    while (lex_.accept_punct(",")) args.push_back(term());
    lex_.expect_punct(")");
    return Term::compound(name.text, std::move(args));
  }

  Lexer lex_;
};

}  // namespace

std::string emit_rule(const NormalRule& rule) {
  std::string out;
  if (rule.head) out = rule.head->to_string();
  if (!rule.body.empty()) {
    out += rule.head ? " :- " : ":- ";
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
      if (i > 0) out += ", ";
      out += emit_literal(rule.body[i]);
    }
  }
  return out + ".";
}

std::string emit_choice(const ChoiceRule& choice) {
  return "1 { " + choice.chosen.to_string() + " : " + choice.domain.to_string() + " } 1.";
}

std::string emit_text(const Program& program) {
  std::ostringstream out;
  for (const auto& c : program.choices) out << emit_choice(c) << '\n';
  std::size_t next_section = 0;
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    while (next_section < program.sections.size() &&
           program.sections[next_section].first_rule <= i) {
      out << "% " << program.sections[next_section++].title << '\n';
    }
    out << emit_rule(program.rules[i]) << '\n';
  }
  return out.str();
}

Program parse_program(std::string_view text) { return ProgramParser(text).parse(); }

}  // namespace xasp::asp
