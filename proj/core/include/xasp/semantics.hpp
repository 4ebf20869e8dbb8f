#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "xasp/policy.hpp"
#include "xasp/request.hpp"
#include "xasp/values.hpp"

namespace xasp {

// Three-valued folds shared by AllOf/Target (conjunction) and AnyOf
// (disjunction).
MatchVal conjunction(std::span<const MatchVal> values);
MatchVal disjunction(std::span<const MatchVal> values);

MatchVal eval_match(const AttributeAtom& match, const Request& request);
MatchVal eval_allof(const AllOf& all_of, const Request& request);
MatchVal eval_anyof(const AnyOf& any_of, const Request& request);
MatchVal eval_target(const Target& target, const Request& request);
Decision eval_rule(const Rule& rule, const Request& request);

// Combining operators. All return na for an empty sequence.
Decision combine_po(std::span<const Decision> decisions);
Decision combine_do(std::span<const Decision> decisions);
Decision combine_fa(std::span<const Decision> decisions);
Decision combine_ooa(std::span<const Decision> decisions);
Decision combine(CombiningAlg alg, std::span<const Decision> decisions);

/// Value of every component touched by an evaluation, keyed by the names in
/// xasp::naming. Entries appear in evaluation order, each once.
class Trace {
 public:
  struct Entry {
    std::string component;
    std::string value;
  };

  void record(const std::string& component, std::string_view value);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const std::string* find(const std::string& component) const;

 private:
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> index_;
};

/// Policy/PolicySet evaluation. The target and every child are evaluated
/// recursively; `trace` may be null.
Decision eval_policy_node(const PolicyTree& tree, const PolicyNode& node, const Request& request,
                          Trace* trace = nullptr);

struct Evaluation {
  Decision decision;
  Trace trace;
};

/// Evaluates the root of a validated tree.
Evaluation eval_root(const PolicyTree& tree, const Request& request);

}  // namespace xasp
