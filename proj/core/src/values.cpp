#include "xasp/values.hpp"

namespace xasp {

std::string_view token(MatchVal v) {
  switch (v) {
    case MatchVal::Match: return "m";
    case MatchVal::NoMatch: return "nm";
    case MatchVal::Indeterminate: return "idt";
  }
  return "?";
}

std::string_view token(CondVal v) {
  switch (v) {
    case CondVal::True: return "t";
    case CondVal::False: return "f";
    case CondVal::Indeterminate: return "idt";
  }
  return "?";
}

std::string_view token(Decision v) {
  switch (v) {
    case Decision::Permit: return "p";
    case Decision::Deny: return "d";
    case Decision::IndetPermit: return "ip";
    case Decision::IndetDeny: return "id";
    case Decision::IndetDenyPermit: return "idp";
    case Decision::NotApplicable: return "na";
  }
  return "?";
}

std::string_view token(CombiningAlg alg) {
  switch (alg) {
    case CombiningAlg::PermitOverrides: return "po";
    case CombiningAlg::DenyOverrides: return "do";
    case CombiningAlg::FirstApplicable: return "fa";
    case CombiningAlg::OnlyOneApplicable: return "ooa";
  }
  return "?";
}

std::string_view token(Effect e) { return e == Effect::Permit ? "p" : "d"; }

std::optional<MatchVal> parse_match_val(std::string_view text) {
  if (text == "m") return MatchVal::Match;
  if (text == "nm") return MatchVal::NoMatch;
  if (text == "idt") return MatchVal::Indeterminate;
  return std::nullopt;
}

std::optional<CondVal> parse_cond_val(std::string_view text) {
  if (text == "t") return CondVal::True;
  if (text == "f") return CondVal::False;
  if (text == "idt") return CondVal::Indeterminate;
  return std::nullopt;
}

std::optional<Decision> parse_decision(std::string_view text) {
  for (Decision d : kAllDecisions) {
    if (token(d) == text) return d;
  }
  return std::nullopt;
}

std::optional<CombiningAlg> parse_combining_alg(std::string_view text) {
  for (auto alg : {CombiningAlg::PermitOverrides, CombiningAlg::DenyOverrides,
                   CombiningAlg::FirstApplicable, CombiningAlg::OnlyOneApplicable}) {
    if (token(alg) == text) return alg;
  }
  return std::nullopt;
}

Decision decision_of(Effect e) {
  return e == Effect::Permit ? Decision::Permit : Decision::Deny;
}

Decision indeterminate_of(Effect e) {
  return e == Effect::Permit ? Decision::IndetPermit : Decision::IndetDeny;
}

Decision dual(Decision d) {
  switch (d) {
    case Decision::Permit: return Decision::Deny;
    case Decision::Deny: return Decision::Permit;
    case Decision::IndetPermit: return Decision::IndetDeny;
    case Decision::IndetDeny: return Decision::IndetPermit;
    case Decision::IndetDenyPermit:
    case Decision::NotApplicable: return d;
  }
  return d;
}

}  // namespace xasp
