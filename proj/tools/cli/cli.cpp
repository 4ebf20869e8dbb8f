#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "xasp/analysis.hpp"
#include "xasp/asp/solve.hpp"
#include "xasp/asp/text.hpp"
#include "xasp/policy.hpp"
#include "xasp/request.hpp"
#include "xasp/semantics.hpp"
#include "xasp/transform.hpp"

namespace xasp::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Prefixes parse errors with the file name.
template <typename Parse>
auto load(const std::string& path, Parse parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InvalidInput(path + ":" + e.what());
  }
}

PolicyTree load_policy(const std::string& path) {
  PolicyTree tree = load(path, [](const std::string& t) { return parse_policy(t); });
  require_valid(tree);
  return tree;
}

Request load_request(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_request(t); });
}

struct Config {
  std::string policy;
  std::string request;
  std::string domain;
  std::string property;
  std::string program;
  std::string output;
  std::string path = "both";
  bool with_errors = false;
  bool all = false;
  bool compat = false;
  std::size_t samples = 0;
  std::size_t cap = 10'000;
  std::uint64_t seed = 0;
};

AnalysisOptions analysis_options(const Config& c) {
  AnalysisOptions o;
  o.with_errors = c.with_errors;
  o.samples = c.samples;
  o.request_cap = c.cap;
  o.seed = c.seed;
  o.path = c.path == "asp" ? AnalysisPath::Asp
           : c.path == "oracle" ? AnalysisPath::Oracle
                                : AnalysisPath::Both;
  return o;
}

int cmd_eval(const Config& c, std::ostream& out) {
  const PolicyTree tree = load_policy(c.policy);
  const Request q = load_request(c.request);
  const Evaluation e = eval_root(tree, q);
  out << token(e.decision) << '\n';
  for (const auto& entry : e.trace.entries()) {
    out << "val(" << entry.component << ")=" << entry.value << '\n';
  }
  return kOk;
}

int cmd_emit(const Config& c, std::ostream& out) {
  const PolicyTree tree = load_policy(c.policy);
  TransformOptions options;
  options.compat_literal = c.compat;
  const asp::Program program =
      c.request.empty() ? transform_tree(tree, options)
                        : transform_all(tree, load_request(c.request), options);
  const std::string text = asp::emit_text(program);
  if (c.output.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw InvalidInput("cannot write " + c.output);
  file << text;
  return kOk;
}

int cmd_solve(const Config& c, std::ostream& out) {
  const asp::Program program =
      load(c.program, [](const std::string& t) { return asp::parse_program(t); });
  const asp::Solution s = asp::solve(program);
  const std::size_t shown = c.all ? s.answer_sets.size() : std::min<std::size_t>(1, s.answer_sets.size());
  for (std::size_t k = 0; k < shown; ++k) {
    out << "answer " << k + 1 << ':';
    for (const auto& a : asp::atom_texts(s.ground, s.answer_sets[k])) out << ' ' << a;
    out << '\n';
  }
  out << "answer sets: " << s.answer_sets.size() << '\n';
  return s.answer_sets.empty() ? kNegative : kOk;
}

int report(const AnalysisReport& r, std::string_view line_tag, std::string_view holds,
           std::string_view violated, std::ostream& out, std::ostream& err) {
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  out << "requests: " << r.requests_checked << " checked of " << r.request_space
      << (r.sampled ? " (sampled)" : "") << '\n';
  if (r.mismatch) {
    out << "path: disagree\n";
    err << "error: ASP and oracle paths disagree: " << *r.mismatch << '\n';
  } else if (r.asp_ran && r.oracle_ran) {
    out << "path: both-agree\n";
  } else if (r.asp_ran) {
    out << (r.oracle_skipped ? "path: asp (oracle skipped above the request cap)\n" : "path: asp\n");
  } else {
    out << "path: oracle\n";
  }
  for (const auto& q : r.counterexamples) out << line_tag << ' ' << q.key() << '\n';
  const bool ok = r.verdict == AnalysisReport::Verdict::Holds;
  out << "VERDICT " << (ok ? holds : violated) << '\n';
  if (r.mismatch) return kPathMismatch;
  return ok ? kOk : kNegative;
}

int cmd_check_gap(const Config& c, std::ostream& out, std::ostream& err) {
  const PolicyTree tree = load_policy(c.policy);
  const AttributeDomain dom = load(c.domain, [](const std::string& t) { return parse_domain(t); });
  return report(check_gap(tree, dom, analysis_options(c)), "GAP", "gap_free", "gaps_found", out,
                err);
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  const PolicyTree tree = load_policy(c.policy);
  const AttributeDomain dom = load(c.domain, [](const std::string& t) { return parse_domain(t); });
  const PropertySpec spec =
      load(c.property, [](const std::string& t) { return parse_property(t); });
  out << "property: " << spec.name << '\n';
  return report(verify_property(tree, dom, spec, analysis_options(c)), "CEX", "holds",
                "violated", out, err);
}

int cmd_cross_check(const Config& c, std::ostream& out, std::ostream& err) {
  const PolicyTree tree = load_policy(c.policy);
  TransformOptions options;
  options.compat_literal = c.compat;
  if (c.compat) err << "note: unrepaired rules are emitted; failures are expected\n";
  std::vector<Request> requests;
  if (!c.request.empty()) {
    requests.push_back(load_request(c.request));
  } else {
    const AttributeDomain dom =
        load(c.domain, [](const std::string& t) { return parse_domain(t); });
    requests = enumerate_requests(dom, c.with_errors);
    const std::size_t wanted = c.samples != 0 ? c.samples : c.cap;
    if (requests.size() > wanted) {
      // Deterministic sample: a seeded shuffle, then canonical order.
      std::mt19937_64 rng(c.seed);
      for (std::size_t i = requests.size(); i > 1; --i) {
        std::swap(requests[i - 1], requests[static_cast<std::size_t>(rng() % i)]);
      }
      requests.erase(requests.begin() + static_cast<std::ptrdiff_t>(wanted), requests.end());
      std::sort(requests.begin(), requests.end(),
                [](const Request& a, const Request& b) { return a.key() < b.key(); });
    }
  }
  std::size_t failures = 0;
  for (const auto& q : requests) {
    const CrossCheckResult r = cross_check(tree, q, options);
    if (!r.ok) {
      ++failures;
      out << "FAIL " << q.key() << ": " << r.detail << '\n';
    } else if (requests.size() == 1) {
      out << "decision: " << token(*r.direct) << '\n';
    }
  }
  out << "requests: " << requests.size() << ", failures: " << failures << '\n';
  out << "VERDICT " << (failures == 0 ? "pass" : "fail") << '\n';
  return failures == 0 ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"XACML 3.0 policy evaluation, compilation to logic programs, and analysis", "xasp"};
  app.require_subcommand(1);
  Config c;

  auto* eval = app.add_subcommand("eval", "Evaluate a request and print the decision and trace");
  eval->add_option("--policy", c.policy, "Policy file")->required();
  eval->add_option("--request", c.request, "Request file")->required();

  auto* emit = app.add_subcommand("emit-asp", "Write the logic program for a policy (and request)");
  emit->add_option("--policy", c.policy, "Policy file")->required();
  emit->add_option("--request", c.request, "Request file");
  emit->add_option("-o,--output", c.output, "Output file (default stdout)");
  emit->add_flag("--compat-literal-transform", c.compat, "Emit the unrepaired published rules");

  auto* solve = app.add_subcommand("solve", "Print the answer sets of a logic program");
  solve->add_option("program", c.program, "Program file")->required();
  solve->add_flag("--all", c.all, "Print every answer set, not just the first");

  auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--policy", c.policy, "Policy file")->required();
    sub->add_option("--domain", c.domain, "Attribute domain file")->required();
    sub->add_flag("--with-errors", c.with_errors, "Let every category be error-marked too");
    sub->add_option("--samples", c.samples, "Requests to sample above the cap");
    sub->add_option("--cap", c.cap, "Largest request space that is enumerated");
    sub->add_option("--seed", c.seed, "Sampling seed");
    sub->add_option("--path", c.path, "asp, oracle or both")
        ->check(CLI::IsMember({"asp", "oracle", "both"}));
  };
  auto* gap = app.add_subcommand("check-gap", "List requests for which the root is na");
  add_analysis(gap);
  auto* verify = app.add_subcommand("verify", "Search counterexamples to a property");
  add_analysis(verify);
  verify->add_option("--property", c.property, "Property file")->required();

  auto* cross = app.add_subcommand("cross-check", "Compare evaluator and compiled program");
  cross->add_option("--policy", c.policy, "Policy file")->required();
  auto* req_opt = cross->add_option("--request", c.request, "Single request file");
  auto* dom_opt = cross->add_option("--domain", c.domain, "Check every request of a domain");
  req_opt->excludes(dom_opt);
  cross->add_flag("--with-errors", c.with_errors, "Include error-marked requests");
  cross->add_option("--samples", c.samples, "Check a seeded sample of this size");
  cross->add_option("--cap", c.cap, "Largest request space that is enumerated");
  cross->add_option("--seed", c.seed, "Sampling seed");
  cross->add_flag("--compat-literal-transform", c.compat, "Use the unrepaired published rules");

  std::vector<const char*> argv{"xasp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*eval) return cmd_eval(c, out);
    if (*emit) return cmd_emit(c, out);
    if (*solve) return cmd_solve(c, out);
    if (*gap) return cmd_check_gap(c, out, err);
    if (*verify) return cmd_verify(c, out, err);
    if (*cross) {
      if (c.request.empty() && c.domain.empty()) {
        err << "error: cross-check needs --request or --domain\n";
        return kInputError;
      }
      return cmd_cross_check(c, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace xasp::cli
