#include "cfl/sorts.hpp"

#include "cfl/errors.hpp"

namespace cfl {

SortedSignature::SortedSignature() {
  declare_sort("Object");
  declare_sort("Agent");
  declare_sort("ActionType");
  declare_sort("Event");
  declare_sort("Action", "Event");
  declare_sort("Moment");
  declare_sort("Fluent");
  declare_sort("Boolean");
  declare_sort("Situation", "Object");

  declare_function("action", {"Agent", "ActionType"}, "Action");
  declare_relation("initially", {"Fluent"});
  declare_relation("holds", {"Fluent", "Moment"});
  declare_relation("happens", {"Event", "Moment"});
  declare_relation("clipped", {"Moment", "Fluent", "Moment"});
  declare_relation("initiates", {"Event", "Fluent", "Moment"});
  declare_relation("terminates", {"Event", "Fluent", "Moment"});
  declare_relation("prior", {"Moment", "Moment"});

  // Distinguished absurdity atom.
  declare_relation("false", {});
}

void SortedSignature::ensure_new_symbol(const std::string& name) const {
  if (constants_.count(name) || functions_.count(name) || relations_.count(name))
    throw SortError("symbol declared twice: " + name);
}

void SortedSignature::declare_sort(const std::string& name, const std::string& parent) {
  if (sorts_.count(name)) throw SortError("sort declared twice: " + name);
  if (!parent.empty()) {
    if (!sorts_.count(parent)) throw SortError("unknown parent sort: " + parent);
    parent_[name] = parent;  // parent precedes child, so no cycle can form
  }
  sorts_.insert(name);
}

void SortedSignature::declare_constant(const std::string& name, const std::string& sort) {
  ensure_new_symbol(name);
  if (!sorts_.count(sort)) throw SortError("unknown sort: " + sort);
  constants_[name] = sort;
}

void SortedSignature::declare_function(const std::string& name,
                                       std::vector<std::string> arg_sorts,
                                       std::string result_sort) {
  ensure_new_symbol(name);
  for (const auto& s : arg_sorts)
    if (!sorts_.count(s)) throw SortError("unknown sort: " + s);
  if (!sorts_.count(result_sort)) throw SortError("unknown sort: " + result_sort);
  functions_[name] = FunctionDecl{std::move(arg_sorts), std::move(result_sort)};
}

void SortedSignature::declare_relation(const std::string& name,
                                       std::vector<std::string> arg_sorts) {
  ensure_new_symbol(name);
  for (const auto& s : arg_sorts)
    if (!sorts_.count(s)) throw SortError("unknown sort: " + s);
  relations_[name] = std::move(arg_sorts);
}

const std::string& SortedSignature::constant_sort(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) throw SortError("unknown constant: " + name);
  return it->second;
}

const FunctionDecl& SortedSignature::function(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw SortError("unknown function: " + name);
  return it->second;
}

const std::vector<std::string>& SortedSignature::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw SortError("unknown relation: " + name);
  return it->second;
}

bool SortedSignature::subsort(const std::string& a, const std::string& b) const {
  std::string cur = a;
  while (true) {
    if (cur == b) return true;
    auto it = parent_.find(cur);
    if (it == parent_.end()) return false;
    cur = it->second;
  }
}

bool SortedSignature::comparable(const std::string& a, const std::string& b) const {
  return subsort(a, b) || subsort(b, a);
}

std::string SortedSignature::parent_of(const std::string& sort) const {
  auto it = parent_.find(sort);
  return it == parent_.end() ? "" : it->second;
}

std::vector<std::string> SortedSignature::constants_of_sort(const std::string& sort) const {
  std::vector<std::string> out;
  for (const auto& [name, s] : constants_)
    if (subsort(s, sort)) out.push_back(name);
  return out;
}

bool is_reserved_word(const std::string& s) {
  static const std::set<std::string> kReserved = {
      "not", "and", "or", "implies", "iff", "forall", "exists",
      "K", "B", "D", "intends", "perceives", "common", "says", "ought",
      "cf", "=", "false",
      "problem", "sort", "const", "func", "rel", "assumptions", "queries",
      "entail", "cf-in", "dde", "mu"};
  return kReserved.count(s) > 0;
}

}  // namespace cfl
