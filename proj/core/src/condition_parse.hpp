#pragma once

#include "lexer.hpp"
#include "xasp/condition.hpp"

namespace xasp::detail {

/// Parses `true` or a conjunction, stopping before the first token that
/// cannot continue it. Applies check_safe.
Condition parse_condition(Lexer& lexer);

}  // namespace xasp::detail
