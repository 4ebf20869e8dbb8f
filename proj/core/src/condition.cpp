#include "xasp/condition.hpp"

#include <algorithm>
#include <map>

#include "condition_parse.hpp"
#include "xasp/error.hpp"

namespace xasp {

namespace {

using Bindings = std::map<std::string, std::string, std::less<>>;

const std::string* resolve(const CondTerm& term, const Bindings& bindings) {
  if (!term.is_variable()) return &term.name;
  auto it = bindings.find(term.name);
  return it == bindings.end() ? nullptr : &it->second;
}

struct Grounder {
  const Request& request;
  std::vector<const PredAtom*> preds;
  std::vector<const Diseq*> diseqs;

  bool diseqs_hold(const Bindings& bindings) const {
    for (const Diseq* d : diseqs) {
      const std::string* lhs = resolve(d->lhs, bindings);
      const std::string* rhs = resolve(d->rhs, bindings);
      if (lhs == nullptr || rhs == nullptr || *lhs == *rhs) return false;
    }
    return true;
  }

  bool search(std::size_t k, Bindings& bindings) const {
    if (k == preds.size()) return diseqs_hold(bindings);
    const PredAtom& pred = *preds[k];
    auto first = request.atoms().lower_bound(AttributeAtom{pred.category, ""});
    for (auto it = first; it != request.atoms().end() && it->category == pred.category; ++it) {
      if (request.has_error(*it)) continue;
      if (!pred.term.is_variable()) {
        if (it->value != pred.term.name) continue;
        if (search(k + 1, bindings)) return true;
        continue;
      }
      auto bound = bindings.find(pred.term.name);
      if (bound != bindings.end()) {
        if (bound->second != it->value) continue;
        if (search(k + 1, bindings)) return true;
        continue;
      }
      bindings.emplace(pred.term.name, it->value);
      bool found = search(k + 1, bindings);
      bindings.erase(pred.term.name);
      if (found) return true;
    }
    return false;
  }
};

std::string term_text(const CondTerm& term) { return term.name; }

}  // namespace

Condition::Condition(ConditionExpr expr) : expr_(std::move(expr)) {}

std::vector<std::string> variables(const ConditionExpr& expr) {
  std::vector<std::string> out;
  auto note = [&](const CondTerm& t) {
    if (t.is_variable() && std::find(out.begin(), out.end(), t.name) == out.end()) {
      out.push_back(t.name);
    }
  };
  for (const auto& item : expr.items) {
    if (const auto* p = std::get_if<PredAtom>(&item)) {
      note(p->term);
    } else {
      const auto& d = std::get<Diseq>(item);
      note(d.lhs);
      note(d.rhs);
    }
  }
  return out;
}

void check_safe(const ConditionExpr& expr) {
  if (expr.items.empty()) throw InvalidInput("condition has no conjuncts");
  std::set<std::string> bound;
  for (const auto& item : expr.items) {
    if (const auto* p = std::get_if<PredAtom>(&item)) {
      if (p->term.is_variable()) bound.insert(p->term.name);
    }
  }
  for (const auto& item : expr.items) {
    if (const auto* d = std::get_if<Diseq>(&item)) {
      for (const CondTerm* t : {&d->lhs, &d->rhs}) {
        if (t->is_variable() && !bound.contains(t->name)) {
          throw InvalidInput("unsafe variable " + t->name +
                             ": it must also occur in a category atom");
        }
      }
    }
  }
}

namespace detail {

namespace {

CondTerm parse_term(Lexer& lexer) {
  const Token& t = lexer.peek();
  if (t.is(TokenKind::Variable)) return CondTerm::variable(lexer.next().text);
  if (t.is(TokenKind::Identifier)) return CondTerm::constant(lexer.next().text);
  lexer.fail("expected a constant or a variable");
}

ConditionItem parse_item(Lexer& lexer) {
  const Token& t = lexer.peek();
  if (t.is(TokenKind::Identifier)) {
    Token head = lexer.next();
    if (lexer.accept_punct("(")) {
      CondTerm term = parse_term(lexer);
      lexer.expect_punct(")");
      return PredAtom{head.text, std::move(term)};
    }
    lexer.expect_punct("!=");
    return Diseq{CondTerm::constant(head.text), parse_term(lexer)};
  }
  if (t.is(TokenKind::Variable)) {
    CondTerm lhs = CondTerm::variable(lexer.next().text);
    lexer.expect_punct("!=");
    return Diseq{std::move(lhs), parse_term(lexer)};
  }
  lexer.fail("expected a condition item");
}

}  // namespace

Condition parse_condition(Lexer& lexer) {
  if (lexer.peek().is_word("true")) {
    lexer.next();
    if (!lexer.peek().is_punct("(")) return Condition::always_true();
    lexer.fail("'true' cannot be used as a category");
  }
  ConditionExpr expr;
  expr.items.push_back(parse_item(lexer));
  while (lexer.accept_punct("&")) expr.items.push_back(parse_item(lexer));
  check_safe(expr);
  return Condition(std::move(expr));
}

}  // namespace detail

Condition parse_condition(std::string_view text) {
  detail::Lexer lexer(text, '#');
  Condition c = detail::parse_condition(lexer);
  if (!lexer.at_end()) lexer.fail("expected '&' or end of condition");
  return c;
}

std::string to_string(const Condition& condition) {
  if (condition.is_true()) return "true";
  std::string out;
  for (const auto& item : condition.expr().items) {
    if (!out.empty()) out += " & ";
    if (const auto* p = std::get_if<PredAtom>(&item)) {
      out += p->category + "(" + term_text(p->term) + ")";
    } else {
      const auto& d = std::get<Diseq>(item);
      out += term_text(d.lhs) + " != " + term_text(d.rhs);
    }
  }
  return out;
}

std::set<std::string> relevant_categories(const Condition& condition) {
  std::set<std::string> out;
  if (condition.is_true()) return out;
  for (const auto& item : condition.expr().items) {
    if (const auto* p = std::get_if<PredAtom>(&item)) out.insert(p->category);
  }
  return out;
}

CondVal eval_condition(const Condition& condition, const Request& request) {
  if (condition.is_true()) return CondVal::True;
  Grounder g{request, {}, {}};
  for (const auto& item : condition.expr().items) {
    if (const auto* p = std::get_if<PredAtom>(&item)) {
      g.preds.push_back(p);
    } else {
      g.diseqs.push_back(&std::get<Diseq>(item));
    }
  }
  Bindings bindings;
  if (g.search(0, bindings)) return CondVal::True;
  for (const std::string& category : relevant_categories(condition)) {
    if (request.has_error_in(category)) return CondVal::Indeterminate;
  }
  return CondVal::False;
}

}  // namespace xasp
