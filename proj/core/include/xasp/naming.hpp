#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "xasp/policy.hpp"

// Component names shared by the direct evaluator's trace and the logic
// program compiler. Indices are 1-based.
namespace xasp::naming {

inline constexpr std::string_view kNullTarget = "null";

std::string match(const AttributeAtom& atom);
std::string all_of(std::string_view owner, std::size_t any_index, std::size_t all_index);
std::string any_of(std::string_view owner, std::size_t any_index);
std::string target(std::string_view owner, const Target& target);
std::string condition(std::string_view rule_id);

/// Ids that would collide with synthetic names or value constants.
bool is_reserved(std::string_view id);

/// Attribute categories that would collide with program predicates,
/// including the request generator's `<cat>_db`, `<cat>_sel`, `<cat>_mode`.
bool is_reserved_category(std::string_view category);

}  // namespace xasp::naming
