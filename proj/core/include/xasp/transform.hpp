#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "xasp/asp/program.hpp"
#include "xasp/policy.hpp"
#include "xasp/request.hpp"

// Compilation of requests and policy trees into normal logic programs.
// Component names follow xasp/naming.hpp, so the answer set of the compiled
// program can be compared atom by atom with the evaluator's trace.
namespace xasp {

/// Turns one body literal of the shared permit-overrides program from
/// positive to negative or back. Used to check that differential tests
/// notice a broken compiler.
struct LiteralFlip {
  std::size_t rule = 0;     // index into po_program()
  std::size_t literal = 0;  // index into that rule's body
};

struct TransformOptions {
  /// Emit the published Policy and first-applicable rules without repairs:
  /// two separate idt pass-through rules and an `algo(fa,P,E)` head that
  /// leaves E unbound (hence unsafe).
  bool compat_literal = false;
  std::optional<LiteralFlip> po_flip;
};

/// `cat(v).` and `error(cat(v)).` facts.
asp::Program transform_request(const Request& request);

/// val(M,m|nm|idt) for a single match.
asp::Program transform_match(const AttributeAtom& atom);

/// AllOf, AnyOf and Target rules for `target` owned by `owner` (without the
/// match rules). The null target compiles to the fact `val(null,m).`
asp::Program transform_target(std::string_view owner, const Target& target);

/// eval/val rules for the rule's condition.
asp::Program transform_condition(const Rule& rule);

/// The four val(R,...) rules, simplified when the target is null.
asp::Program transform_rule(const Rule& rule);

/// decision_of, val and (for first-applicable) algo rules of one node.
asp::Program transform_node(const PolicyNode& node, const TransformOptions& options = {});

/// Shared combining programs over variables P and R.
asp::Program po_program();
asp::Program do_program();
asp::Program ooa_program();

/// Program for the whole tree rooted at tree.root(). Each match, target and
/// combining program appears once. Throws InvalidInput for invalid trees.
asp::Program transform_tree(const PolicyTree& tree, const TransformOptions& options = {});

/// transform_request(request) followed by transform_tree(tree).
asp::Program transform_all(const PolicyTree& tree, const Request& request,
                           const TransformOptions& options = {});

}  // namespace xasp
