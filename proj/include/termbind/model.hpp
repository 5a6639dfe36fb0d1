#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace termbind {

// A finite first-order structure: named carrier elements, total function
// tables and predicate extensions (the set of true tuples).
struct FiniteModel {
  std::vector<std::string> carrier;
  std::map<std::string, std::map<std::vector<std::string>, std::string>> funs;
  std::map<std::string, std::set<std::vector<std::string>>> preds;

  bool operator==(const FiniteModel&) const = default;
};

// What evaluation produces: a carrier element for terms, a truth value for
// formulas.
using FolValue = std::variant<std::string, bool>;

std::string fol_value_str(const FolValue& v);

}  // namespace termbind
