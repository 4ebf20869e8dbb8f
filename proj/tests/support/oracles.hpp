#pragma once

#include <set>
#include <string>
#include <vector>

#include "xasp/asp/ground.hpp"
#include "xasp/asp/program.hpp"
#include "xasp/asp/solve.hpp"
#include "xasp/values.hpp"

// Reference implementations used only by tests. They follow the definitions
// case by case and are deliberately naive.
namespace xasp::testing {

Decision oracle_po(const std::vector<Decision>& s);
Decision oracle_do(const std::vector<Decision>& s);
Decision oracle_fa(const std::vector<Decision>& s);
Decision oracle_ooa(const std::vector<Decision>& s);

/// Every sequence over the six decisions with length in [min_len, max_len].
std::vector<std::vector<Decision>> decision_sequences(std::size_t min_len, std::size_t max_len);

/// Every rule instantiated over every ground term occurring in the program.
/// Choices expand over their domain facts. Exponential; small programs only.
asp::GroundProgram ground_full_product(const asp::Program& program);

/// Number of instances ground_full_product would create for the normal
/// rules, without creating them. Saturates at SIZE_MAX.
std::size_t full_product_size(const asp::Program& program);

bool body_true(const asp::GroundRule& rule, const asp::Interpretation& m);

/// Every rule whose body holds in m has its head in m (constraints: the body
/// does not hold).
bool closed_under_rules(const asp::GroundProgram& gp, const asp::Interpretation& m);

/// Every atom of m is a selected choice element or the head of a rule whose
/// body holds in m.
bool supported(const asp::GroundProgram& gp, const asp::Interpretation& m);

/// No proper subset of m is closed under the reduct of gp w.r.t. m (with
/// the selected choice elements as facts). Checks every subset.
bool minimal(const asp::GroundProgram& gp, const asp::Interpretation& m);

using AtomTextSet = std::set<std::string>;

/// Guess and check over the head and choice atoms, with its own reduct and
/// fixpoint.
std::set<AtomTextSet> oracle_answer_sets(const asp::GroundProgram& gp);

std::set<AtomTextSet> as_text_sets(const asp::GroundProgram& gp,
                                   const std::vector<asp::Interpretation>& sets);

}  // namespace xasp::testing
