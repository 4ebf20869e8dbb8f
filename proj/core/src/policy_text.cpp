#include <map>

#include "condition_parse.hpp"
#include "lexer.hpp"
#include "xasp/error.hpp"
#include "xasp/policy.hpp"

namespace xasp {

namespace {

using detail::Lexer;
using detail::TokenKind;

bool at_block_start(const Lexer& lexer) {
  const auto& t = lexer.peek();
  return t.is(TokenKind::End) || t.is_word("rule") || t.is_word("policy") ||
         t.is_word("policyset");
}

AttributeAtom parse_match(Lexer& lexer) {
  auto category = lexer.expect(TokenKind::Identifier, "a match category");
  lexer.expect_punct("(");
  auto value = lexer.expect(TokenKind::Identifier, "an attribute value");
  lexer.expect_punct(")");
  return {category.text, value.text};
}

Target parse_target(Lexer& lexer) {
  if (lexer.peek().is_word("null")) {
    lexer.next();
    return Target::null();
  }
  lexer.expect_punct("[");
  Target target;
  do {
    AnyOf any;
    do {
      AllOf all;
      all.matches.push_back(parse_match(lexer));
      while (lexer.accept_punct("&")) all.matches.push_back(parse_match(lexer));
      any.all_of.push_back(std::move(all));
    } while (lexer.accept_punct("|"));
    target.any_of.push_back(std::move(any));
  } while (lexer.accept_punct(","));
  lexer.expect_punct("]");
  return target;
}

std::string parse_id(Lexer& lexer) {
  if (at_block_start(lexer)) lexer.fail("expected an identifier");
  return lexer.expect(TokenKind::Identifier, "an identifier").text;
}

void expect_word(Lexer& lexer, std::string_view word) {
  if (!lexer.peek().is_word(word)) lexer.fail("expected '" + std::string(word) + "'");
  lexer.next();
}

CombiningAlg parse_alg(Lexer& lexer) {
  auto tok = lexer.peek();
  if (tok.is(TokenKind::Identifier)) {
    if (auto alg = parse_combining_alg(tok.text)) {
      lexer.next();
      return *alg;
    }
  }
  lexer.fail("expected a combining algorithm (po, do, fa, ooa)");
}

Rule parse_rule(Lexer& lexer) {
  Rule rule;
  rule.id = parse_id(lexer);
  expect_word(lexer, "effect");
  auto eff = lexer.peek();
  if (eff.is_word("permit") || eff.is_word("p")) {
    rule.effect = Effect::Permit;
  } else if (eff.is_word("deny") || eff.is_word("d")) {
    rule.effect = Effect::Deny;
  } else {
    lexer.fail("expected 'permit' or 'deny'");
  }
  lexer.next();
  if (lexer.peek().is_word("target")) {
    lexer.next();
    rule.target = parse_target(lexer);
  }
  if (lexer.peek().is_word("condition")) {
    lexer.next();
    try {
      rule.condition = detail::parse_condition(lexer);
    } catch (const InvalidInput& e) {
      throw ParseError(std::string(e.what()) + " in rule " + rule.id, lexer.peek().line, 0);
    }
  }
  return rule;
}

PolicyNode parse_node(Lexer& lexer, NodeKind kind) {
  PolicyNode node;
  node.kind = kind;
  node.id = parse_id(lexer);
  if (lexer.peek().is_word("target")) {
    lexer.next();
    node.target = parse_target(lexer);
  }
  expect_word(lexer, "combine");
  node.combining = parse_alg(lexer);
  expect_word(lexer, kind == NodeKind::Policy ? "rules" : "children");
  while (!at_block_start(lexer)) node.children.push_back(parse_id(lexer));
  return node;
}

std::string print_target(const Target& target) {
  if (target.is_null()) return "null";
  std::string out = "[ ";
  for (std::size_t i = 0; i < target.any_of.size(); ++i) {
    if (i > 0) out += " , ";
    const auto& any = target.any_of[i];
    for (std::size_t j = 0; j < any.all_of.size(); ++j) {
      if (j > 0) out += " | ";
      const auto& all = any.all_of[j];
      for (std::size_t k = 0; k < all.matches.size(); ++k) {
        if (k > 0) out += " & ";
        out += all.matches[k].to_string();
      }
    }
  }
  return out + " ]";
}

}  // namespace

PolicyTree parse_policy(std::string_view text) {
  Lexer lexer(text, '#');
  PolicyTree tree;
  std::map<std::string, std::size_t> set_lines;
  while (!lexer.at_end()) {
    const auto keyword = lexer.next();
    if (keyword.is_word("rule")) {
      tree.add(parse_rule(lexer));
    } else if (keyword.is_word("policy")) {
      tree.add(parse_node(lexer, NodeKind::Policy));
    } else if (keyword.is_word("policyset")) {
      PolicyNode node = parse_node(lexer, NodeKind::PolicySet);
      set_lines[node.id] = keyword.line;
      tree.add(std::move(node));
    } else {
      throw ParseError("expected 'rule', 'policy' or 'policyset', found '" + keyword.text + "'",
                       keyword.line, keyword.column);
    }
  }
  for (const auto& node : tree.nodes()) {
    if (node.kind != NodeKind::PolicySet) continue;
    bool has_policy = false;
    bool has_set = false;
    for (const auto& child : node.children) {
      if (const PolicyNode* c = tree.find_node(child)) {
        (c->kind == NodeKind::Policy ? has_policy : has_set) = true;
      }
    }
    if (has_policy && has_set) {
      throw ParseError("policyset " + node.id + " mixes policy and policyset children",
                       set_lines[node.id], 1);
    }
  }
  return tree;
}

std::string print_policy(const PolicyTree& tree) {
  std::string out;
  for (const auto& r : tree.rules()) {
    out += "rule " + r.id + " effect " + (r.effect == Effect::Permit ? "permit" : "deny") + "\n";
    out += "  target " + print_target(r.target) + "\n";
    out += "  condition " + to_string(r.condition) + "\n\n";
  }
  for (const auto& n : tree.nodes()) {
    const bool is_policy = n.kind == NodeKind::Policy;
    out += std::string(is_policy ? "policy " : "policyset ") + n.id + " target " +
           print_target(n.target) + " combine " + std::string(token(n.combining)) +
           (is_policy ? " rules" : " children");
    for (const auto& c : n.children) out += " " + c;
    out += "\n";
  }
  return out;
}

}  // namespace xasp
