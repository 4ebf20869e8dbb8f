#include "xasp/semantics.hpp"

#include <algorithm>
#include <array>

#include "xasp/error.hpp"
#include "xasp/naming.hpp"

namespace xasp {

namespace {

std::array<std::size_t, 6> histogram(std::span<const Decision> decisions) {
  std::array<std::size_t, 6> counts{};
  for (Decision d : decisions) ++counts[static_cast<std::size_t>(d)];
  return counts;
}

std::size_t count(const std::array<std::size_t, 6>& h, Decision d) {
  return h[static_cast<std::size_t>(d)];
}

class Evaluator {
 public:
  Evaluator(const PolicyTree& tree, const Request& request, Trace* trace)
      : tree_(tree), request_(request), trace_(trace) {}

  MatchVal target(const std::string& owner, const Target& t) {
    MatchVal result = MatchVal::Match;
    if (!t.is_null()) {
      std::vector<MatchVal> groups;
      for (std::size_t i = 0; i < t.any_of.size(); ++i) {
        const AnyOf& any = t.any_of[i];
        std::vector<MatchVal> alts;
        for (std::size_t j = 0; j < any.all_of.size(); ++j) {
          std::vector<MatchVal> matches;
          for (const auto& m : any.all_of[j].matches) {
            matches.push_back(eval_match(m, request_));
            note(naming::match(m), token(matches.back()));
          }
          alts.push_back(conjunction(matches));
          note(naming::all_of(owner, i + 1, j + 1), token(alts.back()));
        }
        groups.push_back(disjunction(alts));
        note(naming::any_of(owner, i + 1), token(groups.back()));
      }
      result = conjunction(groups);
    }
    note(naming::target(owner, t), token(result));
    return result;
  }

  Decision rule(const Rule& r) {
    MatchVal tv = target(r.id, r.target);
    CondVal cv = eval_condition(r.condition, request_);
    note(naming::condition(r.id), token(cv));
    Decision d;
    if (tv == MatchVal::Match && cv == CondVal::True) {
      d = decision_of(r.effect);
    } else if ((tv == MatchVal::Match && cv == CondVal::False) || tv == MatchVal::NoMatch) {
      d = Decision::NotApplicable;
    } else {
      d = indeterminate_of(r.effect);
    }
    note(r.id, token(d));
    return d;
  }

  Decision node(const PolicyNode& n) {
    MatchVal tv = target(n.id, n.target);
    std::vector<Decision> children;
    children.reserve(n.children.size());
    for (const auto& id : n.children) {
      if (n.kind == NodeKind::Policy) {
        const Rule* r = tree_.find_rule(id);
        if (r == nullptr) throw InvalidInput("policy " + n.id + " refers to unknown rule " + id);
        children.push_back(rule(*r));
      } else {
        const PolicyNode* c = tree_.find_node(id);
        if (c == nullptr) throw InvalidInput("policyset " + n.id + " refers to unknown node " + id);
        children.push_back(node(*c));
      }
    }
    const Decision combined = combine(n.combining, children);
    const bool all_na = std::all_of(children.begin(), children.end(),
                                    [](Decision d) { return d == Decision::NotApplicable; });
    Decision d;
    if (tv == MatchVal::NoMatch || all_na) {
      d = Decision::NotApplicable;
    } else if (tv == MatchVal::Indeterminate && combined == Decision::Deny) {
      d = Decision::IndetDeny;
    } else if (tv == MatchVal::Indeterminate && combined == Decision::Permit) {
      d = Decision::IndetPermit;
    } else {
      d = combined;
    }
    note(n.id, token(d));
    return d;
  }

 private:
  void note(const std::string& component, std::string_view value) {
    if (trace_ != nullptr) trace_->record(component, value);
  }

  const PolicyTree& tree_;
  const Request& request_;
  Trace* trace_;
};

}  // namespace

MatchVal conjunction(std::span<const MatchVal> values) {
  bool all_match = true;
  for (MatchVal v : values) {
    if (v == MatchVal::NoMatch) return MatchVal::NoMatch;
    if (v != MatchVal::Match) all_match = false;
  }
  return all_match ? MatchVal::Match : MatchVal::Indeterminate;
}

MatchVal disjunction(std::span<const MatchVal> values) {
  bool all_no_match = true;
  for (MatchVal v : values) {
    if (v == MatchVal::Match) return MatchVal::Match;
    if (v != MatchVal::NoMatch) all_no_match = false;
  }
  return all_no_match ? MatchVal::NoMatch : MatchVal::Indeterminate;
}

MatchVal eval_match(const AttributeAtom& match, const Request& request) {
  if (request.has_error(match)) return MatchVal::Indeterminate;
  return request.asserts(match) ? MatchVal::Match : MatchVal::NoMatch;
}

MatchVal eval_allof(const AllOf& all_of, const Request& request) {
  std::vector<MatchVal> v;
  for (const auto& m : all_of.matches) v.push_back(eval_match(m, request));
  return conjunction(v);
}

MatchVal eval_anyof(const AnyOf& any_of, const Request& request) {
  std::vector<MatchVal> v;
  for (const auto& a : any_of.all_of) v.push_back(eval_allof(a, request));
  return disjunction(v);
}

MatchVal eval_target(const Target& target, const Request& request) {
  if (target.is_null()) return MatchVal::Match;
  std::vector<MatchVal> v;
  for (const auto& e : target.any_of) v.push_back(eval_anyof(e, request));
  return conjunction(v);
}

Decision eval_rule(const Rule& rule, const Request& request) {
  PolicyTree empty;
  return Evaluator(empty, request, nullptr).rule(rule);
}

Decision combine_po(std::span<const Decision> decisions) {
  const auto h = histogram(decisions);
  const std::size_t n = decisions.size();
  if (count(h, Decision::Permit) > 0) return Decision::Permit;
  const std::size_t ip = count(h, Decision::IndetPermit);
  if (count(h, Decision::IndetDenyPermit) > 0 ||
      (ip > 0 && count(h, Decision::IndetDeny) + count(h, Decision::Deny) > 0)) {
    return Decision::IndetDenyPermit;
  }
  const std::size_t na = count(h, Decision::NotApplicable);
  if (ip > 0 && ip + na == n) return Decision::IndetPermit;
  const std::size_t d = count(h, Decision::Deny);
  const std::size_t id = count(h, Decision::IndetDeny);
  if (d > 0 && d + id + na == n) return Decision::Deny;
  if (id > 0 && id + na == n) return Decision::IndetDeny;
  return Decision::NotApplicable;
}

Decision combine_do(std::span<const Decision> decisions) {
  std::vector<Decision> mirrored(decisions.begin(), decisions.end());
  std::transform(mirrored.begin(), mirrored.end(), mirrored.begin(),
                 [](Decision d) { return dual(d); });
  return dual(combine_po(mirrored));
}

Decision combine_fa(std::span<const Decision> decisions) {
  auto it = std::find_if(decisions.begin(), decisions.end(),
                         [](Decision d) { return d != Decision::NotApplicable; });
  return it == decisions.end() ? Decision::NotApplicable : *it;
}

Decision combine_ooa(std::span<const Decision> decisions) {
  const auto h = histogram(decisions);
  const std::size_t p = count(h, Decision::Permit);
  const std::size_t d = count(h, Decision::Deny);
  const std::size_t ip = count(h, Decision::IndetPermit);
  const std::size_t id = count(h, Decision::IndetDeny);
  const std::size_t idp = count(h, Decision::IndetDenyPermit);
  if (idp > 0 || (d + id > 0 && p + ip > 0)) return Decision::IndetDenyPermit;
  if (p + ip == 0 && (id > 0 || d >= 2)) return Decision::IndetDeny;
  if (d + id == 0 && (ip > 0 || p >= 2)) return Decision::IndetPermit;
  if (p + d == 1) return p == 1 ? Decision::Permit : Decision::Deny;
  return Decision::NotApplicable;
}

Decision combine(CombiningAlg alg, std::span<const Decision> decisions) {
  switch (alg) {
    case CombiningAlg::PermitOverrides: return combine_po(decisions);
    case CombiningAlg::DenyOverrides: return combine_do(decisions);
    case CombiningAlg::FirstApplicable: return combine_fa(decisions);
    case CombiningAlg::OnlyOneApplicable: return combine_ooa(decisions);
  }
  return Decision::NotApplicable;
}

void Trace::record(const std::string& component, std::string_view value) {
  if (index_.contains(component)) return;
  index_.emplace(component, entries_.size());
  entries_.push_back({component, std::string(value)});
}

const std::string* Trace::find(const std::string& component) const {
  auto it = index_.find(component);
  return it == index_.end() ? nullptr : &entries_[it->second].value;
}

Decision eval_policy_node(const PolicyTree& tree, const PolicyNode& node, const Request& request,
                          Trace* trace) {
  return Evaluator(tree, request, trace).node(node);
}

Evaluation eval_root(const PolicyTree& tree, const Request& request) {
  Evaluation result{Decision::NotApplicable, {}};
  result.decision = eval_policy_node(tree, tree.root(), request, &result.trace);
  return result;
}

}  // namespace xasp
