#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace xasp {

/// Result of matching a Match, AllOf, AnyOf or Target against a request.
enum class MatchVal { Match, NoMatch, Indeterminate };

/// Three-valued result of a Condition.
enum class CondVal { True, False, Indeterminate };

/// Rule, Policy and PolicySet decisions. Rules never produce IndetDenyPermit.
enum class Decision {
  Permit,
  Deny,
  IndetPermit,
  IndetDeny,
  IndetDenyPermit,
  NotApplicable,
};

inline constexpr std::array<Decision, 6> kAllDecisions = {
    Decision::Permit,    Decision::Deny,            Decision::IndetPermit,
    Decision::IndetDeny, Decision::IndetDenyPermit, Decision::NotApplicable,
};

enum class Effect { Permit, Deny };

enum class CombiningAlg { PermitOverrides, DenyOverrides, FirstApplicable, OnlyOneApplicable };

// Tokens used in CLI output, report files and emitted logic programs:
// m nm idt / t f idt / p d ip id idp na / po do fa ooa.
std::string_view token(MatchVal v);
std::string_view token(CondVal v);
std::string_view token(Decision v);
std::string_view token(CombiningAlg alg);
std::string_view token(Effect e);

std::optional<MatchVal> parse_match_val(std::string_view text);
std::optional<CondVal> parse_cond_val(std::string_view text);
std::optional<Decision> parse_decision(std::string_view text);
std::optional<CombiningAlg> parse_combining_alg(std::string_view text);

/// The decision a rule with this effect yields when it applies.
Decision decision_of(Effect e);

/// i_E: the indeterminate decision for an effect.
Decision indeterminate_of(Effect e);

/// Swaps p<->d and ip<->id; fixes idp and na. An involution.
Decision dual(Decision d);

}  // namespace xasp
