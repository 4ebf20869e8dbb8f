#include "xasp/policy.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "xasp/error.hpp"
#include "xasp/naming.hpp"

namespace xasp {

void PolicyTree::add(Rule rule) {
  index_.try_emplace(rule.id, Slot{true, rules_.size()});
  rules_.push_back(std::move(rule));
}

void PolicyTree::add(PolicyNode node) {
  index_.try_emplace(node.id, Slot{false, nodes_.size()});
  nodes_.push_back(std::move(node));
}

std::optional<NodeRef> PolicyTree::lookup(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  if (it->second.is_rule) return NodeRef{std::cref(rules_[it->second.index])};
  return NodeRef{std::cref(nodes_[it->second.index])};
}

const Rule* PolicyTree::find_rule(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end() || !it->second.is_rule) return nullptr;
  return &rules_[it->second.index];
}

const PolicyNode* PolicyTree::find_node(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end() || it->second.is_rule) return nullptr;
  return &nodes_[it->second.index];
}

std::optional<std::string> PolicyTree::root_id() const {
  std::set<std::string, std::less<>> referenced;
  for (const auto& n : nodes_) {
    if (n.kind == NodeKind::PolicySet) referenced.insert(n.children.begin(), n.children.end());
  }
  std::optional<std::string> root;
  for (const auto& n : nodes_) {
    if (referenced.contains(n.id)) continue;
    if (root) return std::nullopt;
    root = n.id;
  }
  return root;
}

const PolicyNode& PolicyTree::root() const {
  auto id = root_id();
  if (!id) throw InvalidInput("policy tree has no unique root");
  return *find_node(*id);
}

bool ValidationResult::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

class Validator {
 public:
  explicit Validator(const PolicyTree& tree) : tree_(tree) {}

  ValidationResult run() {
    check_ids();
    for (const auto& r : tree_.rules()) {
      check_target(r.id, r.target);
      if (!r.condition.is_true()) {
        try {
          check_safe(r.condition.expr());
        } catch (const InvalidInput& e) {
          add(ViolationKind::UnsafeCondition, "rule " + r.id + ": " + e.what());
        }
        for (const auto& category : relevant_categories(r.condition)) {
          check_category(r.id, category);
        }
      }
    }
    for (const auto& n : tree_.nodes()) {
      check_target(n.id, n.target);
      check_children(n);
    }
    check_roots();
    check_cycles();
    check_rule_references();
    return std::move(result_);
  }

 private:
  void add(ViolationKind kind, std::string message) {
    result_.violations.push_back({kind, std::move(message)});
  }

  void check_id(const std::string& id) {
    if (!is_identifier(id)) {
      add(ViolationKind::InvalidIdentifier, "invalid identifier '" + id + "'");
    } else if (naming::is_reserved(id)) {
      add(ViolationKind::ReservedIdentifier, "identifier '" + id + "' is reserved");
    }
    if (!seen_.insert(id).second) add(ViolationKind::DuplicateId, "duplicate id " + id);
  }

  void check_category(const std::string& owner, const std::string& category) {
    if (naming::is_reserved_category(category)) {
      add(ViolationKind::ReservedIdentifier,
          owner + ": category '" + category + "' is reserved");
    }
  }

  void check_ids() {
    for (const auto& r : tree_.rules()) check_id(r.id);
    for (const auto& n : tree_.nodes()) check_id(n.id);
  }

  void check_target(const std::string& owner, const Target& target) {
    for (const auto& any : target.any_of) {
      if (any.all_of.empty()) {
        add(ViolationKind::EmptyTargetGroup, owner + ": empty AnyOf group in target");
      }
      for (const auto& all : any.all_of) {
        if (all.matches.empty()) {
          add(ViolationKind::EmptyTargetGroup, owner + ": empty AllOf group in target");
        }
        for (const auto& m : all.matches) {
          if (!is_identifier(m.category) || !is_identifier(m.value)) {
            add(ViolationKind::InvalidIdentifier, owner + ": malformed match " + m.to_string());
          } else {
            check_category(owner, m.category);
          }
        }
      }
    }
  }

  void check_children(const PolicyNode& n) {
    const bool is_policy = n.kind == NodeKind::Policy;
    if (is_policy && n.children.empty()) {
      add(ViolationKind::EmptyPolicy, "policy " + n.id + " must have at least one rule");
    }
    std::set<std::string> listed;
    for (const auto& child : n.children) {
      if (!listed.insert(child).second) {
        add(ViolationKind::DuplicateChild, n.id + " lists child " + child + " more than once");
      }
      auto ref = tree_.lookup(child);
      if (!ref) {
        add(ViolationKind::DanglingReference, n.id + " refers to unknown id " + child);
        continue;
      }
      const bool child_is_rule = std::holds_alternative<std::reference_wrapper<const Rule>>(*ref);
      if (is_policy && !child_is_rule) {
        add(ViolationKind::MixedChildren, "policy " + n.id + " has non-rule child " + child);
      } else if (!is_policy && child_is_rule) {
        add(ViolationKind::MixedChildren, "policyset " + n.id + " has rule child " + child);
      }
    }
  }

  void check_roots() {
    if (tree_.nodes().empty()) {
      add(ViolationKind::NoRoot, "tree has no policy or policyset");
      return;
    }
    std::set<std::string> referenced;
    for (const auto& n : tree_.nodes()) {
      if (n.kind == NodeKind::PolicySet) referenced.insert(n.children.begin(), n.children.end());
    }
    std::vector<std::string> roots;
    for (const auto& n : tree_.nodes()) {
      if (!referenced.contains(n.id)) roots.push_back(n.id);
    }
    if (roots.empty()) {
      add(ViolationKind::NoRoot, "every node is referenced by another node");
    } else if (roots.size() > 1) {
      std::string names;
      for (const auto& r : roots) names += " " + r;
      add(ViolationKind::MultipleRoots, "more than one root:" + names);
    }
  }

  // Iterative three-colour DFS over PolicySet -> node edges.
  void check_cycles() {
    enum class Colour { White, Grey, Black };
    std::unordered_map<std::string, Colour> colour;
    for (const auto& n : tree_.nodes()) colour[n.id] = Colour::White;
    for (const auto& start : tree_.nodes()) {
      if (colour[start.id] != Colour::White) continue;
      std::vector<std::pair<const PolicyNode*, std::size_t>> stack{{&start, 0}};
      colour[start.id] = Colour::Grey;
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (node->kind == NodeKind::Policy || next == node->children.size()) {
          colour[node->id] = Colour::Black;
          stack.pop_back();
          continue;
        }
        const PolicyNode* child = tree_.find_node(node->children[next++]);
        if (child == nullptr) continue;
        Colour& c = colour[child->id];
        if (c == Colour::Grey) {
          add(ViolationKind::Cycle, "cyclic reference through " + child->id);
          return;
        }
        if (c == Colour::White) {
          c = Colour::Grey;
          stack.emplace_back(child, 0);
        }
      }
    }
  }

  void check_rule_references() {
    std::set<std::string> referenced;
    for (const auto& n : tree_.nodes()) {
      if (n.kind == NodeKind::Policy) referenced.insert(n.children.begin(), n.children.end());
    }
    for (const auto& r : tree_.rules()) {
      if (!referenced.contains(r.id)) {
        add(ViolationKind::UnreferencedRule, "rule " + r.id + " is not used by any policy");
      }
    }
  }

  const PolicyTree& tree_;
  std::set<std::string> seen_;
  ValidationResult result_;
};

}  // namespace

ValidationResult validate(const PolicyTree& tree) { return Validator(tree).run(); }

void require_valid(const PolicyTree& tree) {
  ValidationResult result = validate(tree);
  if (result.ok()) return;
  std::string message = "invalid policy tree:";
  for (const auto& v : result.violations) message += "\n  " + v.message;
  throw InvalidInput(message);
}

namespace naming {

std::string match(const AttributeAtom& atom) { return atom.to_string(); }

std::string all_of(std::string_view owner, std::size_t any_index, std::size_t all_index) {
  return "allof_" + std::string(owner) + "_" + std::to_string(any_index) + "_" +
         std::to_string(all_index);
}

std::string any_of(std::string_view owner, std::size_t any_index) {
  return "anyof_" + std::string(owner) + "_" + std::to_string(any_index);
}

std::string target(std::string_view owner, const Target& target) {
  if (target.is_null()) return std::string(kNullTarget);
  return "tar_" + std::string(owner);
}

std::string condition(std::string_view rule_id) { return "cond_" + std::string(rule_id); }

bool is_reserved(std::string_view id) {
  static constexpr std::array<std::string_view, 31> kWords = {
      "null", "p",    "d",      "ip",        "id",     "idp",       "na",    "m",
      "nm",   "idt",  "t",      "f",         "po",     "do",        "fa",    "ooa",
      "gap",  "rule", "policy", "policyset", "target", "condition", "combine", "rules",
      "children", "effect", "permit", "deny", "true", "error", "ok"};
  static constexpr std::array<std::string_view, 4> kPrefixes = {"tar_", "cond_", "anyof_",
                                                                "allof_"};
  if (std::find(kWords.begin(), kWords.end(), id) != kWords.end()) return true;
  return std::any_of(kPrefixes.begin(), kPrefixes.end(),
                     [id](std::string_view p) { return id.starts_with(p); });
}

bool is_reserved_category(std::string_view category) {
  static constexpr std::array<std::string_view, 7> kWords = {
      "val", "algo", "decision_of", "eval", "gap", "error", "error_mode"};
  static constexpr std::array<std::string_view, 3> kSuffixes = {"_db", "_sel", "_mode"};
  if (std::find(kWords.begin(), kWords.end(), category) != kWords.end()) return true;
  return std::any_of(kSuffixes.begin(), kSuffixes.end(),
                     [category](std::string_view s) { return category.ends_with(s); });
}

}  // namespace naming

}  // namespace xasp
