#include "xasp/analysis.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "xasp/asp/solve.hpp"
#include "xasp/naming.hpp"
#include "xasp/semantics.hpp"

namespace xasp {

using asp::Atom;
using asp::cst;
using asp::NormalRule;
using asp::Program;
using asp::Term;
using asp::var;

void AttributeDomain::check() const {
  if (values.empty()) throw InvalidInput("domain has no categories");
  for (const auto& [category, vals] : values) {
    if (!is_identifier(category)) throw InvalidInput("invalid category '" + category + "'");
    if (naming::is_reserved_category(category)) {
      throw InvalidInput("category '" + category + "' is reserved");
    }
    if (vals.empty()) throw InvalidInput("category " + category + " has no values");
    std::set<std::string> seen;
    for (const auto& v : vals) {
      if (!is_identifier(v)) throw InvalidInput("invalid value '" + v + "' in " + category);
      if (!seen.insert(v).second) throw InvalidInput("duplicate value " + v + " in " + category);
    }
  }
}

std::size_t request_space_size(const AttributeDomain& domain, bool with_errors) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (const auto& [category, vals] : domain.values) {
    const std::size_t options = vals.size() * (with_errors ? 2 : 1);
    if (options == 0) return 0;
    if (total > kMax / options) return kMax;
    total *= options;
  }
  return total;
}

namespace {

struct Slot {
  std::string category;
  std::vector<std::string> values;
};

std::vector<Slot> slots(const AttributeDomain& domain) {
  std::vector<Slot> out;
  for (const auto& [category, vals] : domain.values) {
    std::vector<std::string> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    out.push_back({category, std::move(sorted)});
  }
  return out;
}

std::size_t choices_per_slot(bool with_errors) { return with_errors ? 2 : 1; }

// Selection layout matches request_generator: per category the value
// choice, then (with errors) the mode choice with ok before err.
Request request_of(const std::vector<Slot>& s, bool with_errors,
                   const std::vector<std::size_t>& selection) {
  std::set<AttributeAtom> atoms;
  std::set<AttributeAtom> errors;
  const std::size_t step = choices_per_slot(with_errors);
  for (std::size_t i = 0; i < s.size(); ++i) {
    AttributeAtom a{s[i].category, s[i].values[selection[i * step]]};
    if (with_errors && selection[i * step + 1] == 1) {
      errors.insert(std::move(a));
    } else {
      atoms.insert(std::move(a));
    }
  }
  return Request::make(std::move(atoms), std::move(errors));
}

std::vector<std::size_t> choice_sizes(const std::vector<Slot>& s, bool with_errors) {
  std::vector<std::size_t> out;
  for (const auto& slot : s) {
    out.push_back(slot.values.size());
    if (with_errors) out.push_back(2);
  }
  return out;
}

bool advance(std::vector<std::size_t>& selection, const std::vector<std::size_t>& sizes) {
  for (std::size_t c = sizes.size(); c-- > 0;) {
    if (++selection[c] < sizes[c]) return true;
    selection[c] = 0;
  }
  return false;
}

// The selections an analysis looks at: all of them when the space fits
// under the cap, otherwise a seeded sample in first-drawn order.
std::vector<std::vector<std::size_t>> selections(const AttributeDomain& domain,
                                                 const AnalysisOptions& options, bool& sampled) {
  const auto s = slots(domain);
  const auto sizes = choice_sizes(s, options.with_errors);
  const std::size_t space = request_space_size(domain, options.with_errors);
  std::vector<std::vector<std::size_t>> out;
  sampled = space > options.request_cap;
  if (!sampled) {
    std::vector<std::size_t> sel(sizes.size(), 0);
    do {
      out.push_back(sel);
    } while (advance(sel, sizes));
    return out;
  }
  const std::size_t wanted = options.samples == 0 ? options.request_cap : options.samples;
  std::mt19937_64 rng(options.seed);
  std::set<std::vector<std::size_t>> seen;
  // Draw budget bounds the loop when `wanted` approaches the space size.
  for (std::size_t draws = 0; out.size() < wanted && draws < wanted * 8; ++draws) {
    std::vector<std::size_t> sel;
    sel.reserve(sizes.size());
    for (std::size_t n : sizes) sel.push_back(static_cast<std::size_t>(rng() % n));
    if (seen.insert(sel).second) out.push_back(std::move(sel));
  }
  return out;
}

std::set<std::string> policy_categories(const PolicyTree& tree) {
  std::set<std::string> out;
  auto from_target = [&](const Target& t) {
    for (const auto& any : t.any_of) {
      for (const auto& all : any.all_of) {
        for (const auto& m : all.matches) out.insert(m.category);
      }
    }
  };
  for (const auto& r : tree.rules()) {
    from_target(r.target);
    for (const auto& c : relevant_categories(r.condition)) out.insert(c);
  }
  for (const auto& n : tree.nodes()) from_target(n.target);
  return out;
}

void sort_requests(std::vector<Request>& requests) {
  std::sort(requests.begin(), requests.end(),
            [](const Request& a, const Request& b) { return a.key() < b.key(); });
  requests.erase(std::unique(requests.begin(), requests.end(),
                             [](const Request& a, const Request& b) { return a.key() == b.key(); }),
                 requests.end());
}

std::string describe(const std::vector<Request>& only, std::string_view path) {
  return std::to_string(only.size()) + " counterexample(s) only on the " + std::string(path) +
         " path, first " + only.front().key();
}

std::vector<Request> difference(const std::vector<Request>& a, const std::vector<Request>& b) {
  std::set<std::string> keys;
  for (const auto& r : b) keys.insert(r.key());
  std::vector<Request> out;
  for (const auto& r : a) {
    if (!keys.contains(r.key())) out.push_back(r);
  }
  return out;
}

class Analysis {
 public:

  Analysis(const PolicyTree& tree, const AttributeDomain& domain, const AnalysisOptions& options)
      : tree_(tree), domain_(domain), options_(options) {
    require_valid(tree_);
    domain_.check();
    root_ = tree_.root().id;
  }

  AnalysisReport run(const Program& encoding, const PropertySpec* spec) {
    AnalysisReport report;
    report.request_space = request_space_size(domain_, options_.with_errors);
    const auto chosen = selections(domain_, options_, report.sampled);
    report.requests_checked = chosen.size();
    for (const auto& c : policy_categories(tree_)) {
      if (!domain_.values.contains(c)) {
        report.warnings.push_back("category " + c + " used by the policy is not in the domain");
      }
    }
    if (spec != nullptr) {
      for (const auto& a : spec->include) {
        const auto it = domain_.values.find(a.category);
        if (it == domain_.values.end() ||
            std::find(it->second.begin(), it->second.end(), a.value) == it->second.end()) {
          report.warnings.push_back("include " + a.to_string() + " is outside the domain");
        }
      }
    }

    std::vector<Request> asp_found;
    std::vector<Request> oracle_found;
    if (options_.path != AnalysisPath::Oracle) {
      asp_found = asp_path(encoding, chosen);
      report.asp_ran = true;
    }
    if (options_.path != AnalysisPath::Asp) {
      if (report.sampled && options_.path == AnalysisPath::Both) {
        report.oracle_skipped = true;
      } else {
        oracle_found = oracle_path(chosen, spec);
        report.oracle_ran = true;
      }
    }
    if (report.asp_ran && report.oracle_ran) {
      auto only_asp = difference(asp_found, oracle_found);
      auto only_oracle = difference(oracle_found, asp_found);
      if (!only_asp.empty()) {
        report.mismatch = describe(only_asp, "ASP");
      } else if (!only_oracle.empty()) {
        report.mismatch = describe(only_oracle, "oracle");
      }
    }
    report.counterexamples = report.asp_ran ? std::move(asp_found) : std::move(oracle_found);
    report.verdict = report.counterexamples.empty() ? AnalysisReport::Verdict::Holds
                                                    : AnalysisReport::Verdict::Violated;
    return report;
  }

  const std::string& root() const { return root_; }

 private:
  std::vector<Request> asp_path(const Program& encoding,
                                const std::vector<std::vector<std::size_t>>& chosen) {
    Program program = transform_tree(tree_);
    program.begin_section("request generator");
    program.append(request_generator(domain_, options_.with_errors));
    program.begin_section("query");
    program.append(encoding);
    const auto gp = asp::ground(program);
    const asp::SelectionSolver solver(gp);
    std::vector<Request> found;
    for (const auto& sel : chosen) {
      if (auto model = solver.solve(sel)) found.push_back(extract(gp, *model));
    }
    sort_requests(found);
    return found;
  }

  Request extract(const asp::GroundProgram& gp, const asp::Interpretation& model) const {
    std::set<AttributeAtom> atoms;
    std::set<AttributeAtom> errors;
    for (const auto& [category, vals] : domain_.values) {
      for (const auto& v : vals) {
        AttributeAtom a{category, v};
        if (auto id = gp.find(a.to_string()); id && model.contains(*id)) atoms.insert(a);
        if (auto id = gp.find("error(" + a.to_string() + ")"); id && model.contains(*id)) {
          errors.insert(a);
        }
      }
    }
    return Request::make(std::move(atoms), std::move(errors));
  }

  std::vector<Request> oracle_path(const std::vector<std::vector<std::size_t>>& chosen,
                                   const PropertySpec* spec) {
    const auto s = slots(domain_);
    std::vector<Request> found;
    for (const auto& sel : chosen) {
      Request q = request_of(s, options_.with_errors, sel);
      const Decision d = eval_root(tree_, q).decision;
      if (spec == nullptr ? d == Decision::NotApplicable : is_counterexample(*spec, q, d)) {
        found.push_back(std::move(q));
      }
    }
    sort_requests(found);
    return found;
  }

  static bool is_counterexample(const PropertySpec& spec, const Request& q, Decision d) {
    if (d != spec.violation) return false;
    for (const auto& a : spec.include) {
      if (!q.asserts(a)) return false;
    }
    for (const auto& a : spec.exclude) {
      if (q.asserts(a)) return false;
    }
    return true;
  }

  const PolicyTree& tree_;
  const AttributeDomain& domain_;
  const AnalysisOptions& options_;
  std::string root_;
};

}  // namespace

std::vector<Request> enumerate_requests(const AttributeDomain& domain, bool with_errors) {
  const auto s = slots(domain);
  const auto sizes = choice_sizes(s, with_errors);
  std::vector<Request> out;
  if (s.empty()) return out;
  std::vector<std::size_t> sel(sizes.size(), 0);
  do {
    out.push_back(request_of(s, with_errors, sel));
  } while (advance(sel, sizes));
  return out;
}

Program request_generator(const AttributeDomain& domain, bool with_errors) {
  Program p;
  if (with_errors) {
    p.add(NormalRule::fact(Atom("error_mode", {cst("ok")})));
    p.add(NormalRule::fact(Atom("error_mode", {cst("err")})));
  }
  for (const auto& slot : slots(domain)) {
    const std::string db = slot.category + "_db";
    for (const auto& v : slot.values) p.add(NormalRule::fact(Atom(db, {cst(v)})));
    if (!with_errors) {
      p.add(asp::ChoiceRule{Atom(slot.category, {var("X")}), Atom(db, {var("X")})});
      continue;
    }
    const std::string sel = slot.category + "_sel";
    const std::string mode = slot.category + "_mode";
    p.add(asp::ChoiceRule{Atom(sel, {var("X")}), Atom(db, {var("X")})});
    p.add(asp::ChoiceRule{Atom(mode, {var("M")}), Atom("error_mode", {var("M")})});
    p.add(NormalRule{Atom(slot.category, {var("X")}),
                     {asp::Positive{Atom(sel, {var("X")})}, asp::Positive{Atom(mode, {cst("ok")})}}});
    p.add(NormalRule{Atom("error", {Term::compound(slot.category, {var("X")})}),
                     {asp::Positive{Atom(sel, {var("X")})}, asp::Positive{Atom(mode, {cst("err")})}}});
  }
  return p;
}

Program gap_encoding(std::string_view root) {
  Program p;
  p.add(NormalRule{Atom("gap"),
                   {asp::Positive{Atom("val", {cst(std::string(root)), cst("na")})}}});
  p.add(NormalRule{std::nullopt, {asp::Negative{Atom("gap")}}});
  return p;
}

Program property_encoding(std::string_view root, const PropertySpec& spec) {
  Program p;
  auto attr = [](const AttributeAtom& a) { return Atom(a.category, {cst(a.value)}); };
  for (const auto& a : spec.include) p.add(NormalRule{std::nullopt, {asp::Negative{attr(a)}}});
  for (const auto& a : spec.exclude) p.add(NormalRule{std::nullopt, {asp::Positive{attr(a)}}});
  p.add(NormalRule{std::nullopt,
                   {asp::Negative{Atom("val", {cst(std::string(root)),
                                               cst(std::string(token(spec.violation)))})}}});
  return p;
}

AnalysisReport check_gap(const PolicyTree& tree, const AttributeDomain& domain,
                         const AnalysisOptions& options) {
  Analysis a(tree, domain, options);
  return a.run(gap_encoding(a.root()), nullptr);
}

AnalysisReport verify_property(const PolicyTree& tree, const AttributeDomain& domain,
                               const PropertySpec& spec, const AnalysisOptions& options) {
  Analysis a(tree, domain, options);
  return a.run(property_encoding(a.root(), spec), &spec);
}

CrossCheckResult cross_check(const PolicyTree& tree, const Request& request,
                             const TransformOptions& options) {
  CrossCheckResult result;
  const Evaluation direct = eval_root(tree, request);
  result.direct = direct.decision;
  asp::GroundProgram gp;
  try {
    gp = asp::ground(transform_all(tree, request, options));
  } catch (const asp::UnsafeRule& e) {
    result.detail = std::string("compiled program rejected: ") + e.what();
    return result;
  }
  result.acyclic = asp::check_acyclic(gp).acyclic;
  std::vector<asp::Interpretation> sets;
  try {
    sets = asp::answer_sets(gp);
  } catch (const asp::SolveError& e) {
    result.detail = std::string("solver gave up: ") + e.what();
    return result;
  }
  result.answer_sets = sets.size();
  if (!result.acyclic) {
    result.detail = "grounded program is not acyclic";
    return result;
  }
  if (sets.size() != 1) {
    result.detail = "expected exactly one answer set, found " + std::to_string(sets.size());
    return result;
  }
  std::map<std::string, std::vector<std::string>> compiled;
  for (asp::AtomId id : sets.front().atoms()) {
    const Atom& a = gp.atom(id);
    if (a.predicate != "val" || a.args.size() != 2) continue;
    compiled[a.args[0].to_string()].push_back(a.args[1].to_string());
  }
  const std::string root = tree.root().id;
  if (auto it = compiled.find(root); it != compiled.end() && it->second.size() == 1) {
    result.compiled = it->second.front();
  }
  for (const auto& entry : direct.trace.entries()) {
    auto it = compiled.find(entry.component);
    if (it == compiled.end()) {
      result.detail = entry.component + ": evaluator " + entry.value + ", no val atom";
      return result;
    }
    if (it->second.size() != 1 || it->second.front() != entry.value) {
      std::string got;
      for (const auto& v : it->second) got += (got.empty() ? "" : " ") + v;
      result.detail = entry.component + ": evaluator " + entry.value + ", answer set " + got;
      return result;
    }
  }
  for (const auto& [component, values] : compiled) {
    if (direct.trace.find(component) == nullptr) {
      result.detail = component + ": val atom for a component the evaluator never reached";
      return result;
    }
  }
  result.ok = true;
  return result;
}

}  // namespace xasp
