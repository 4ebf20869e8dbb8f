#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "xasp/condition.hpp"
#include "xasp/request.hpp"
#include "xasp/values.hpp"

namespace xasp {

struct AllOf {
  std::vector<AttributeAtom> matches;
  bool operator==(const AllOf&) const = default;
};

struct AnyOf {
  std::vector<AllOf> all_of;
  bool operator==(const AnyOf&) const = default;
};

/// Conjunction of AnyOf groups. No groups means the null target, which
/// always matches.
struct Target {
  std::vector<AnyOf> any_of;

  static Target null() { return {}; }
  bool is_null() const noexcept { return any_of.empty(); }

  bool operator==(const Target&) const = default;
};

struct Rule {
  std::string id;
  Effect effect = Effect::Permit;
  Target target;
  Condition condition;

  bool operator==(const Rule&) const = default;
};

enum class NodeKind { Policy, PolicySet };

/// A Policy (children are rule ids) or a PolicySet (children are node ids).
struct PolicyNode {
  std::string id;
  NodeKind kind = NodeKind::Policy;
  Target target;
  std::vector<std::string> children;
  CombiningAlg combining = CombiningAlg::PermitOverrides;

  bool operator==(const PolicyNode&) const = default;
};

using NodeRef = std::variant<std::reference_wrapper<const Rule>,
                             std::reference_wrapper<const PolicyNode>>;

/// Owns the rules and nodes of one policy forest. Children refer to ids; the
/// root is the unique node that is no other node's child.
class PolicyTree {
 public:
  void add(Rule rule);
  void add(PolicyNode node);

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const std::vector<PolicyNode>& nodes() const noexcept { return nodes_; }

  std::optional<NodeRef> lookup(std::string_view id) const;
  const Rule* find_rule(std::string_view id) const;
  const PolicyNode* find_node(std::string_view id) const;

  /// Present when exactly one node is unreferenced.
  std::optional<std::string> root_id() const;

  /// Throws InvalidInput when root_id() is absent.
  const PolicyNode& root() const;

  bool operator==(const PolicyTree& other) const {
    return rules_ == other.rules_ && nodes_ == other.nodes_;
  }

 private:
  struct Slot {
    bool is_rule;
    std::size_t index;
  };

  std::vector<Rule> rules_;
  std::vector<PolicyNode> nodes_;
  std::unordered_map<std::string, Slot> index_;
};

enum class ViolationKind {
  DuplicateId,
  EmptyPolicy,
  MixedChildren,
  DanglingReference,
  DuplicateChild,
  EmptyTargetGroup,
  InvalidIdentifier,
  ReservedIdentifier,
  NoRoot,
  MultipleRoots,
  Cycle,
  UnreferencedRule,
  UnsafeCondition,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

ValidationResult validate(const PolicyTree& tree);

/// Throws InvalidInput listing every violation.
void require_valid(const PolicyTree& tree);

/// Text format, one definition per block:
///
///   rule r1 effect permit
///     target [ subject(doctor) & action(read) , resource(a) | resource(b) ]
///     condition patient_id(X) & patient_record_id(X)
///   policy p1 target null combine ooa rules r1 r2
///   policyset root target null combine po children p1
///
/// `target` and `condition` are optional on rules (default null / true).
/// A PolicySet lists either only policies or only policysets.
PolicyTree parse_policy(std::string_view text);
std::string print_policy(const PolicyTree& tree);

}  // namespace xasp
