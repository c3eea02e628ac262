#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cfl {

struct FunctionDecl {
  std::vector<std::string> arg_sorts;
  std::string result_sort;
};

// Single-inheritance sort forest plus typed symbol declarations.
//
// The builtin sorts (Agent, ActionType, Action <= Event, Moment, Fluent,
// Boolean, Object, Situation <= Object) and the event-calculus symbols are
// declared by the constructor; user files extend the signature.
class SortedSignature {
public:
  SortedSignature();

  void declare_sort(const std::string& name, const std::string& parent = "");
  void declare_constant(const std::string& name, const std::string& sort);
  void declare_function(const std::string& name, std::vector<std::string> arg_sorts,
                        std::string result_sort);
  void declare_relation(const std::string& name, std::vector<std::string> arg_sorts);

  bool has_sort(const std::string& name) const { return sorts_.count(name) > 0; }
  bool has_constant(const std::string& name) const { return constants_.count(name) > 0; }
  bool has_function(const std::string& name) const { return functions_.count(name) > 0; }
  bool has_relation(const std::string& name) const { return relations_.count(name) > 0; }

  const std::string& constant_sort(const std::string& name) const;
  const FunctionDecl& function(const std::string& name) const;
  const std::vector<std::string>& relation(const std::string& name) const;

  /// Reflexive-transitive: true iff `a` equals `b` or is a descendant of `b`.
  bool subsort(const std::string& a, const std::string& b) const;

  /// True iff the sorts are equal or one is an ancestor of the other.
  bool comparable(const std::string& a, const std::string& b) const;

  /// All declared constants of a sort (or a descendant sort), in name order.
  std::vector<std::string> constants_of_sort(const std::string& sort) const;

  const std::map<std::string, std::string>& constants() const { return constants_; }
  const std::set<std::string>& sorts() const { return sorts_; }
  const std::map<std::string, FunctionDecl>& functions() const { return functions_; }
  const std::map<std::string, std::vector<std::string>>& relations() const {
    return relations_;
  }
  /// Parent sort, or "" for a root.
  std::string parent_of(const std::string& sort) const;

private:
  void ensure_new_symbol(const std::string& name) const;

  std::set<std::string> sorts_;
  std::map<std::string, std::string> parent_;  // child -> parent, partial
  std::map<std::string, std::string> constants_;
  std::map<std::string, FunctionDecl> functions_;
  std::map<std::string, std::vector<std::string>> relations_;
};

/// Symbols that the concrete syntax reserves as formula/term structure.
bool is_reserved_word(const std::string& s);

}  // namespace cfl
