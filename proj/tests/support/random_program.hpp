#pragma once

#include <random>

#include "xasp/asp/program.hpp"

namespace xasp::testing {

struct PropositionalShape {
  int atoms = 8;  // at most 10 keeps the exhaustive checks cheap
  int rules = 10;
  /// Heads only depend on lower-numbered atoms.
  bool acyclic = false;
  double constraint = 0.1;
  /// Adds `1 { c(X) : cd(X) } 1.` over two or three domain facts, with
  /// c(_) atoms usable in rule bodies.
  bool with_choice = false;
};

/// Ground normal program over the atoms a0..a<n-1>.
asp::Program random_propositional(std::mt19937_64& rng, const PropositionalShape& shape);

/// Non-recursive program with variables: facts over e/2 and p/1, a middle
/// layer q/1, r/2 and a top layer s/1, t/2, with negation and guards only
/// on lower layers. Its ground programs are acyclic.
asp::Program random_layered(std::mt19937_64& rng);

}  // namespace xasp::testing
