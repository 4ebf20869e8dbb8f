#include "xasp/asp/term.hpp"

#include <algorithm>

namespace xasp::asp {

bool Term::is_ground() const {
  if (kind_ == Kind::Variable) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& t) { return t.is_ground(); });
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (kind_ == Kind::Variable) {
    if (std::find(out.begin(), out.end(), name_) == out.end()) out.push_back(name_);
    return;
  }
  for (const auto& a : args_) a.collect_variables(out);
}

std::string Term::to_string() const {
  if (kind_ != Kind::Compound) return name_;
  std::string out = name_ + "(";
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i > 0) out += ',';
    out += args_[i].to_string();
  }
  return out + ")";
}

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

void Atom::collect_variables(std::vector<std::string>& out) const {
  for (const auto& a : args) a.collect_variables(out);
}

std::string Atom::to_string() const {
  if (args.empty()) return predicate;
  std::string out = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ',';
    out += args[i].to_string();
  }
  return out + ")";
}

namespace {

template <typename T>
std::strong_ordering compare_lists(const std::vector<T>& a, const std::vector<T>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (auto c = kind_ <=> other.kind_; c != 0) return c;
  if (auto c = name_ <=> other.name_; c != 0) return c;
  return compare_lists(args_, other.args_);
}

std::strong_ordering Atom::operator<=>(const Atom& other) const {
  if (auto c = predicate <=> other.predicate; c != 0) return c;
  return compare_lists(args, other.args);
}

}  // namespace xasp::asp
