#pragma once

#include <string>
#include <string_view>

#include "xasp/asp/program.hpp"

namespace xasp::asp {

// One statement per line:
//   head :- b1, not b2, X != Y.
//   fact.
//   :- body.
//   1 { p(X) : dom(X) } 1.
// `%` starts a comment.

std::string emit_rule(const NormalRule& rule);
std::string emit_choice(const ChoiceRule& choice);
std::string emit_text(const Program& program);

/// Throws ParseError with line and column.
Program parse_program(std::string_view text);

}  // namespace xasp::asp
