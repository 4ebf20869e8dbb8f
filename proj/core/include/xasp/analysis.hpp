#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xasp/asp/program.hpp"
#include "xasp/policy.hpp"
#include "xasp/request.hpp"
#include "xasp/transform.hpp"
#include "xasp/values.hpp"

namespace xasp {

/// Candidate values per attribute category. A request picks exactly one
/// value from every category.
struct AttributeDomain {
  std::map<std::string, std::vector<std::string>> values;

  /// Throws InvalidInput for empty categories, malformed or reserved names
  /// and duplicate values.
  void check() const;
  bool operator==(const AttributeDomain&) const = default;
};

/// Lines `category: v1 v2 ...`; `#` comments. Values are sorted on load.
AttributeDomain parse_domain(std::string_view text);
std::string print_domain(const AttributeDomain& domain);

/// A request is a counterexample when it asserts every `include` atom,
/// none of the `exclude` atoms, and the root evaluates to `violation`.
struct PropertySpec {
  std::string name;
  std::vector<AttributeAtom> include;
  std::vector<AttributeAtom> exclude;
  Decision violation = Decision::Permit;

  bool operator==(const PropertySpec&) const = default;
};

///   property no_anonymous_read
///   include action(read)
///   exclude subject(patient) subject(doctor)
///   violation p
PropertySpec parse_property(std::string_view text);
std::string print_property(const PropertySpec& spec);

enum class AnalysisPath { Asp, Oracle, Both };

struct AnalysisOptions {
  /// Every category may also be error-marked instead of asserted.
  bool with_errors = false;
  AnalysisPath path = AnalysisPath::Both;
  /// Larger request spaces are sampled instead of enumerated, and with
  /// AnalysisPath::Both the oracle is then skipped.
  std::size_t request_cap = 10'000;
  /// Requests drawn when sampling; 0 means request_cap.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct AnalysisReport {
  enum class Verdict { Holds, Violated };

  Verdict verdict = Verdict::Holds;
  /// Sorted by Request::key(), without duplicates.
  std::vector<Request> counterexamples;
  std::size_t request_space = 0;  // saturates at SIZE_MAX
  std::size_t requests_checked = 0;
  bool sampled = false;
  bool asp_ran = false;
  bool oracle_ran = false;
  /// The space exceeded the cap, so only sampled ASP selections ran.
  bool oracle_skipped = false;
  /// Set when both paths ran and disagree.
  std::optional<std::string> mismatch;
  std::vector<std::string> warnings;
};

/// Size of the request space; saturates at SIZE_MAX.
std::size_t request_space_size(const AttributeDomain& domain, bool with_errors);

/// Every request over `domain` in lexicographic order: categories by name,
/// values sorted, an asserted value before its error-marked twin.
std::vector<Request> enumerate_requests(const AttributeDomain& domain, bool with_errors);

/// One exactly-one choice per category over `<cat>_db` facts. With errors a
/// second choice picks the mode `ok` or `err` for that category.
asp::Program request_generator(const AttributeDomain& domain, bool with_errors);

/// `gap :- val(root,na).` and `:- not gap.`
asp::Program gap_encoding(std::string_view root);

/// Constraints that keep only counterexamples of `spec`.
asp::Program property_encoding(std::string_view root, const PropertySpec& spec);

/// Requests whose root decision is na.
AnalysisReport check_gap(const PolicyTree& tree, const AttributeDomain& domain,
                         const AnalysisOptions& options = {});

AnalysisReport verify_property(const PolicyTree& tree, const AttributeDomain& domain,
                               const PropertySpec& spec, const AnalysisOptions& options = {});

struct CrossCheckResult {
  bool ok = false;
  bool acyclic = false;
  std::size_t answer_sets = 0;
  std::optional<Decision> direct;
  /// Root value in the answer set when there is exactly one.
  std::optional<std::string> compiled;
  /// First difference or failure, empty when ok.
  std::string detail;
};

/// Compiles tree+request, grounds and solves, then compares every
/// val(X,V) of the unique answer set with the evaluator's trace. Never
/// throws for compiler defects (unsafe rules, cyclic programs); those are
/// reported as failures.
CrossCheckResult cross_check(const PolicyTree& tree, const Request& request,
                             const TransformOptions& options = {});

}  // namespace xasp
