#include "xasp/transform.hpp"

#include <set>

#include "xasp/naming.hpp"

namespace xasp {

using asp::Atom;
using asp::CmpOp;
using asp::Comparison;
using asp::cst;
using asp::Literal;
using asp::Negative;
using asp::NormalRule;
using asp::Positive;
using asp::Program;
using asp::Term;
using asp::var;

namespace {

Term attribute_term(const AttributeAtom& a) { return Term::compound(a.category, {cst(a.value)}); }

Atom attribute(const AttributeAtom& a) { return Atom(a.category, {cst(a.value)}); }

Atom error_of(Term inner) { return Atom("error", {std::move(inner)}); }

Atom val(Term component, Term value) { return Atom("val", {std::move(component), std::move(value)}); }
Atom val(std::string_view component, std::string_view value) {
  return val(cst(std::string(component)), cst(std::string(value)));
}

Atom algo(std::string_view alg, Term node, Term value) {
  return Atom("algo", {cst(std::string(alg)), std::move(node), std::move(value)});
}

Atom decision_of(Term node, Term child, Term value) {
  return Atom("decision_of", {std::move(node), std::move(child), std::move(value)});
}

Literal pos(Atom a) { return Positive{std::move(a)}; }
Literal neg(Atom a) { return Negative{std::move(a)}; }
Literal neq(Term a, Term b) { return Comparison{std::move(a), CmpOp::Neq, std::move(b)}; }

NormalRule rule(Atom head, std::vector<Literal> body) { return {std::move(head), std::move(body)}; }

std::string_view tok(Decision d) { return token(d); }

// Three-valued component `name` whose idt case is "neither m nor nm".
void add_idt_by_default(Program& p, const std::string& name) {
  p.add(rule(val(name, "idt"), {neg(val(name, "m")), neg(val(name, "nm"))}));
}

bool uses_null(const Atom& a) {
  return a.predicate == "val" && a.args.size() == 2 && a.args[0] == cst(std::string(naming::kNullTarget)) &&
         a.args[1] != cst("m");
}

// Drops rules that need the null target to be nm or idt; it is always m.
void simplify_null(Program& p) {
  std::erase_if(p.rules, [](const NormalRule& r) {
    for (const Atom* a : r.positive_atoms()) {
      if (uses_null(*a)) return true;
    }
    return false;
  });
}

std::string_view alg_token(CombiningAlg alg) { return token(alg); }

// Dual of a permit/deny flavoured token, identity otherwise.
std::string dual_token(const std::string& t) {
  if (t == "p") return "d";
  if (t == "d") return "p";
  if (t == "ip") return "id";
  if (t == "id") return "ip";
  if (t == "po") return "do";
  return t;
}

Term dual_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t;
    case Term::Kind::Constant:
      return cst(dual_token(t.name()));
    case Term::Kind::Compound: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(dual_term(a));
      return Term::compound(t.name(), std::move(args));
    }
  }
  return t;
}

Atom dual_atom(const Atom& a) {
  Atom out(a.predicate);
  for (const auto& t : a.args) out.args.push_back(dual_term(t));
  return out;
}

void flip(Program& p, const LiteralFlip& f) {
  if (f.rule >= p.rules.size() || f.literal >= p.rules[f.rule].body.size()) {
    throw InvalidInput("literal flip out of range");
  }
  Literal& lit = p.rules[f.rule].body[f.literal];
  if (auto* a = std::get_if<Positive>(&lit)) {
    lit = Negative{a->atom};
  } else if (auto* n = std::get_if<Negative>(&lit)) {
    lit = Positive{n->atom};
  } else {
    auto& c = std::get<Comparison>(lit);
    c.op = c.op == CmpOp::Eq ? CmpOp::Neq : CmpOp::Eq;
  }
}

}  // namespace

Program transform_request(const Request& request) {
  Program p;
  for (const auto& a : request.atoms()) p.add(NormalRule::fact(attribute(a)));
  for (const auto& a : request.errors()) p.add(NormalRule::fact(error_of(attribute_term(a))));
  return p;
}

Program transform_match(const AttributeAtom& atom) {
  Program p;
  const Term m = attribute_term(atom);
  p.add(rule(val(m, cst("m")), {pos(attribute(atom)), neg(error_of(m))}));
  p.add(rule(val(m, cst("nm")), {neg(attribute(atom)), neg(error_of(m))}));
  p.add(rule(val(m, cst("idt")), {pos(error_of(m))}));
  return p;
}

Program transform_target(std::string_view owner, const Target& target) {
  Program p;
  if (target.is_null()) {
    p.add(NormalRule::fact(val(naming::kNullTarget, "m")));
    return p;
  }
  const std::string tar = naming::target(owner, target);
  std::vector<std::string> any_names;
  for (std::size_t i = 0; i < target.any_of.size(); ++i) {
    const AnyOf& any = target.any_of[i];
    std::vector<std::string> all_names;
    for (std::size_t j = 0; j < any.all_of.size(); ++j) {
      const std::string all = naming::all_of(owner, i + 1, j + 1);
      std::vector<Literal> body;
      for (const auto& m : any.all_of[j].matches) body.push_back(pos(val(attribute_term(m), cst("m"))));
      p.add(rule(val(all, "m"), std::move(body)));
      for (const auto& m : any.all_of[j].matches) {
        p.add(rule(val(all, "nm"), {pos(val(attribute_term(m), cst("nm")))}));
      }
      add_idt_by_default(p, all);
      all_names.push_back(all);
    }
    const std::string any_name = naming::any_of(owner, i + 1);
    for (const auto& all : all_names) p.add(rule(val(any_name, "m"), {pos(val(all, "m"))}));
    std::vector<Literal> body;
    for (const auto& all : all_names) body.push_back(pos(val(all, "nm")));
    p.add(rule(val(any_name, "nm"), std::move(body)));
    add_idt_by_default(p, any_name);
    any_names.push_back(any_name);
  }
  std::vector<Literal> body;
  for (const auto& any : any_names) body.push_back(pos(val(any, "m")));
  p.add(rule(val(tar, "m"), std::move(body)));
  for (const auto& any : any_names) p.add(rule(val(tar, "nm"), {pos(val(any, "nm"))}));
  add_idt_by_default(p, tar);
  return p;
}

Program transform_condition(const Rule& r) {
  Program p;
  const std::string cond = naming::condition(r.id);
  const Term c = cst(cond);
  auto eval = [&](Term value) { return Atom("eval", {c, std::move(value)}); };
  p.add(rule(val(c, var("V")), {pos(eval(var("V")))}));
  if (r.condition.is_true()) {
    p.add(NormalRule::fact(eval(cst("t"))));
    return p;
  }
  auto cond_term = [](const CondTerm& t) { return t.is_variable() ? var(t.name) : cst(t.name); };
  std::vector<Literal> body;
  std::vector<Literal> guards;
  for (const auto& item : r.condition.expr().items) {
    if (const auto* a = std::get_if<PredAtom>(&item)) {
      body.push_back(pos(Atom(a->category, {cond_term(a->term)})));
    } else {
      const auto& d = std::get<Diseq>(item);
      guards.push_back(neq(cond_term(d.lhs), cond_term(d.rhs)));
    }
  }
  for (const auto& item : r.condition.expr().items) {
    if (const auto* a = std::get_if<PredAtom>(&item)) {
      body.push_back(neg(error_of(Term::compound(a->category, {cond_term(a->term)}))));
    }
  }
  body.insert(body.end(), guards.begin(), guards.end());
  p.add(rule(eval(cst("t")), std::move(body)));
  for (const auto& category : relevant_categories(r.condition)) {
    p.add(rule(eval(cst("idt")),
               {pos(error_of(Term::compound(category, {var("V")}))), neg(eval(cst("t")))}));
  }
  p.add(rule(eval(cst("f")), {neg(eval(cst("t"))), neg(eval(cst("idt")))}));
  return p;
}

Program transform_rule(const Rule& r) {
  Program p;
  const std::string tar = naming::target(r.id, r.target);
  const std::string cond = naming::condition(r.id);
  const std::string e(token(r.effect));
  const std::string ie(tok(indeterminate_of(r.effect)));
  p.add(rule(val(r.id, e), {pos(val(tar, "m")), pos(val(cond, "t"))}));
  p.add(rule(val(r.id, "na"), {pos(val(tar, "m")), pos(val(cond, "f"))}));
  p.add(rule(val(r.id, "na"), {pos(val(tar, "nm"))}));
  p.add(rule(val(r.id, ie), {neg(val(r.id, e)), neg(val(r.id, "na"))}));
  if (r.target.is_null()) simplify_null(p);
  return p;
}

Program transform_node(const PolicyNode& n, const TransformOptions& options) {
  Program p;
  const Term node = cst(n.id);
  if (n.children.empty()) {
    p.add(NormalRule::fact(val(n.id, "na")));
    return p;
  }
  for (const auto& child : n.children) {
    p.add(rule(decision_of(node, cst(child), var("V")), {pos(val(cst(child), var("V")))}));
  }
  const std::string tar = naming::target(n.id, n.target);
  const std::string_view alg = alg_token(n.combining);
  p.add(rule(val(n.id, "id"), {pos(val(tar, "idt")), pos(algo(alg, node, cst("d")))}));
  p.add(rule(val(n.id, "ip"), {pos(val(tar, "idt")), pos(algo(alg, node, cst("p")))}));
  p.add(rule(val(n.id, "na"), {pos(val(tar, "nm"))}));
  std::vector<Literal> all_na;
  for (const auto& child : n.children) all_na.push_back(pos(val(child, "na")));
  p.add(rule(val(n.id, "na"), std::move(all_na)));
  auto passthrough = [&](std::string_view tv) {
    return std::vector<Literal>{pos(val(cst(tar), cst(std::string(tv)))),
                                pos(decision_of(node, var("R"), var("V"))),
                                neq(var("V"), cst("na")), pos(algo(alg, node, var("E")))};
  };
  p.add(rule(val(node, var("E")), passthrough("m")));
  if (options.compat_literal) {
    auto not_p = passthrough("idt");
    not_p.push_back(neq(var("E"), cst("p")));
    p.add(rule(val(node, var("E")), std::move(not_p)));
    auto not_d = passthrough("idt");
    not_d.push_back(neq(var("E"), cst("d")));
    p.add(rule(val(node, var("E")), std::move(not_d)));
  } else {
    auto body = passthrough("idt");
    body.push_back(neq(var("E"), cst("p")));
    body.push_back(neq(var("E"), cst("d")));
    p.add(rule(val(node, var("E")), std::move(body)));
  }
  if (n.target.is_null()) simplify_null(p);

  if (n.combining == CombiningAlg::FirstApplicable) {
    const std::size_t count = n.children.size();
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Literal> body;
      for (std::size_t i = 0; i < k; ++i) {
        body.push_back(pos(decision_of(node, cst(n.children[i]), cst("na"))));
      }
      const bool last = k + 1 == count;
      if (options.compat_literal) {
        // First rule tests V but returns E; later rules use E throughout.
        const Term x = k == 0 ? var("V") : var("E");
        body.push_back(pos(decision_of(node, cst(n.children[k]), x)));
        if (!last || k == 0) body.push_back(neq(x, cst("na")));
        p.add(rule(algo("fa", node, var("E")), std::move(body)));
      } else {
        body.push_back(pos(decision_of(node, cst(n.children[k]), var("V"))));
        if (!last) body.push_back(neq(var("V"), cst("na")));
        p.add(rule(algo("fa", node, var("V")), std::move(body)));
      }
    }
  }
  return p;
}

Program po_program() {
  Program p;
  const Term P = var("P");
  auto a = [&](const char* v) { return algo("po", P, cst(v)); };
  auto dec = [&](const char* r, const char* v) { return decision_of(P, var(r), cst(v)); };
  p.add(rule(a("p"), {pos(dec("R", "p"))}));
  p.add(rule(a("idp"), {neg(a("p")), pos(dec("R", "idp"))}));
  p.add(rule(a("idp"), {neg(a("p")), pos(dec("R1", "ip")), pos(dec("R2", "d"))}));
  p.add(rule(a("idp"), {neg(a("p")), pos(dec("R1", "ip")), pos(dec("R2", "id"))}));
  p.add(rule(a("ip"), {neg(a("p")), neg(a("idp")), pos(dec("R", "ip"))}));
  p.add(rule(a("d"), {neg(a("p")), neg(a("idp")), neg(a("ip")), pos(dec("R", "d"))}));
  p.add(rule(a("id"), {neg(a("p")), neg(a("idp")), neg(a("ip")), neg(a("d")), pos(dec("R", "id"))}));
  p.add(rule(a("na"), {neg(a("p")), neg(a("idp")), neg(a("ip")), neg(a("d")), neg(a("id")),
                       pos(dec("R", "na"))}));
  return p;
}

Program do_program() {
  Program p;
  for (const auto& r : po_program().rules) {
    NormalRule d;
    d.head = dual_atom(*r.head);
    for (const auto& lit : r.body) {
      if (const auto* a = std::get_if<Positive>(&lit)) {
        d.body.push_back(pos(dual_atom(a->atom)));
      } else if (const auto* n = std::get_if<Negative>(&lit)) {
        d.body.push_back(neg(dual_atom(n->atom)));
      } else {
        d.body.push_back(lit);
      }
    }
    p.add(std::move(d));
  }
  return p;
}

Program ooa_program() {
  Program p;
  const Term P = var("P");
  auto a = [&](const char* v) { return algo("ooa", P, cst(v)); };
  auto dec = [&](const char* r, const char* v) { return decision_of(P, var(r), cst(v)); };
  const Literal distinct = neq(var("R1"), var("R2"));
  p.add(rule(a("idp"), {pos(dec("R", "idp"))}));
  p.add(rule(a("idp"), {pos(dec("R1", "id")), pos(dec("R2", "ip")), distinct}));
  p.add(rule(a("idp"), {pos(dec("R1", "id")), pos(dec("R2", "p")), distinct}));
  p.add(rule(a("idp"), {pos(dec("R1", "d")), pos(dec("R2", "ip")), distinct}));
  p.add(rule(a("idp"), {pos(dec("R1", "d")), pos(dec("R2", "p")), distinct}));
  p.add(rule(a("ip"), {neg(a("idp")), pos(dec("R", "ip"))}));
  p.add(rule(a("ip"), {neg(a("idp")), pos(dec("R1", "p")), pos(dec("R2", "p")), distinct}));
  p.add(rule(a("id"), {neg(a("idp")), pos(dec("R", "id"))}));
  p.add(rule(a("id"), {neg(a("idp")), pos(dec("R1", "d")), pos(dec("R2", "d")), distinct}));
  p.add(rule(a("p"), {neg(a("idp")), neg(a("id")), neg(a("ip")), pos(dec("R", "p"))}));
  p.add(rule(a("d"), {neg(a("idp")), neg(a("id")), neg(a("ip")), pos(dec("R", "d"))}));
  p.add(rule(a("na"), {neg(a("idp")), neg(a("id")), neg(a("ip")), neg(a("p")), neg(a("d")),
                       pos(dec("R", "na"))}));
  return p;
}

namespace {

class TreeCompiler {
 public:
  TreeCompiler(const PolicyTree& tree, const TransformOptions& options)
      : tree_(tree), options_(options) {}

  Program run() {
    require_valid(tree_);
    node(tree_.root());
    for (CombiningAlg alg : {CombiningAlg::PermitOverrides, CombiningAlg::DenyOverrides,
                             CombiningAlg::OnlyOneApplicable}) {
      if (!algs_.contains(alg)) continue;
      Program shared;
      if (alg == CombiningAlg::PermitOverrides) {
        shared = po_program();
        if (options_.po_flip) flip(shared, *options_.po_flip);
      } else if (alg == CombiningAlg::DenyOverrides) {
        shared = do_program();
      } else {
        shared = ooa_program();
      }
      section("combining algorithm " + std::string(token(alg)), shared);
    }
    return std::move(out_);
  }

 private:
  void section(const std::string& title, const Program& p) {
    if (p.rules.empty() && p.choices.empty()) return;
    out_.begin_section(title);
    out_.append(p);
  }

  void target(const std::string& owner, const Target& t) {
    if (t.is_null()) {
      if (null_done_) return;
      null_done_ = true;
      section("target null", transform_target(owner, t));
      return;
    }
    for (const auto& any : t.any_of) {
      for (const auto& all : any.all_of) {
        for (const auto& m : all.matches) {
          if (matches_.insert(m).second) section("match " + m.to_string(), transform_match(m));
        }
      }
    }
    section("target " + naming::target(owner, t), transform_target(owner, t));
  }

  void node(const PolicyNode& n) {
    if (!visited_.insert(n.id).second) return;
    target(n.id, n.target);
    section(std::string(n.kind == NodeKind::Policy ? "policy " : "policyset ") + n.id,
            transform_node(n, options_));
    if (n.combining != CombiningAlg::FirstApplicable) algs_.insert(n.combining);
    for (const auto& child : n.children) {
      if (n.kind == NodeKind::Policy) {
        rule(*tree_.find_rule(child));
      } else {
        node(*tree_.find_node(child));
      }
    }
  }

  void rule(const Rule& r) {
    if (!visited_.insert(r.id).second) return;
    target(r.id, r.target);
    section("condition " + naming::condition(r.id), transform_condition(r));
    section("rule " + r.id, transform_rule(r));
  }

  const PolicyTree& tree_;
  const TransformOptions& options_;
  Program out_;
  std::set<std::string> visited_;
  std::set<AttributeAtom> matches_;
  std::set<CombiningAlg> algs_;
  bool null_done_ = false;
};

}  // namespace

Program transform_tree(const PolicyTree& tree, const TransformOptions& options) {
  return TreeCompiler(tree, options).run();
}

Program transform_all(const PolicyTree& tree, const Request& request,
                      const TransformOptions& options) {
  Program p;
  p.begin_section("request");
  p.append(transform_request(request));
  p.append(transform_tree(tree, options));
  return p;
}

}  // namespace xasp
