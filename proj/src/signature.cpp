#include "termbind/signature.hpp"

#include "termbind/errors.hpp"

namespace termbind {

const OpDecl* Signature::find_op(const OpSymId& op) const {
  auto it = ops_.find(op);
  return it == ops_.end() ? nullptr : &it->second;
}

const SortId& Signature::sort_of_var(const VarSortId& vs) const {
  auto it = as_sort_.find(vs);
  if (it == as_sort_.end()) {
    throw UndeclaredVarSort("undeclared varsort: " + vs.name);
  }
  return it->second;
}

bool Signature::is_in_bar(const VarSortId& vs, const SortId& s) const {
  if (!has_varsort(vs)) {
    throw UndeclaredIdentifier("undeclared varsort: " + vs.name);
  }
  if (!has_sort(s)) {
    throw UndeclaredIdentifier("undeclared sort: " + s.name);
  }
  return bar_.count({vs, s}) > 0;
}

std::variant<Signature, std::vector<ValidationError>> validate_signature(
    const RawSignature& raw) {
  using Kind = ValidationError::Kind;
  std::vector<ValidationError> errors;
  auto err = [&errors](Kind k, std::string detail) {
    errors.push_back(ValidationError{k, std::move(detail)});
  };

  Signature sig;

  for (const SortId& s : raw.sorts) {
    if (!is_valid_identifier(s.name)) {
      err(Kind::InvalidIdentifier, "sort '" + s.name + "'");
    }
    if (!sig.sorts_.insert(s).second) {
      err(Kind::DuplicateDeclaration, "sort '" + s.name + "'");
    }
  }

  for (const auto& [vs, s] : raw.varsorts) {
    if (!is_valid_identifier(vs.name)) {
      err(Kind::InvalidIdentifier, "varsort '" + vs.name + "'");
    }
    if (!sig.varsorts_.insert(vs).second) {
      err(Kind::DuplicateDeclaration, "varsort '" + vs.name + "'");
      continue;
    }
    if (!sig.sorts_.count(s)) {
      err(Kind::UndeclaredSort,
          "varsort '" + vs.name + "' maps to undeclared sort '" + s.name + "'");
    }
    sig.as_sort_.emplace(vs, s);
  }

  // as_sort must be injective: distinct varsorts provide distinct variables.
  std::map<SortId, VarSortId> seen_target;
  for (const auto& [vs, s] : sig.as_sort_) {
    auto [it, fresh_target] = seen_target.emplace(s, vs);
    if (!fresh_target) {
      err(Kind::NonInjectiveAsSort, "varsorts '" + it->second.name + "' and '" +
                                        vs.name + "' both map to sort '" +
                                        s.name + "'");
    }
  }

  for (const auto& [op, decl] : raw.ops) {
    if (!is_valid_identifier(op.name)) {
      err(Kind::InvalidIdentifier, "opsym '" + op.name + "'");
    }
    if (!sig.ops_.emplace(op, decl).second) {
      err(Kind::DuplicateDeclaration, "opsym '" + op.name + "'");
      continue;
    }
    auto need_sort = [&](const SortId& s, const std::string& where) {
      if (!sig.sorts_.count(s)) {
        err(Kind::UndeclaredSort,
            "opsym '" + op.name + "' " + where + " undeclared sort '" + s.name + "'");
      }
    };
    need_sort(decl.result, "results in");
    for (const auto& [i, s] : decl.arity.free) {
      need_sort(s, "free input " + std::to_string(i) + " has");
    }
    for (const auto& [j, pair] : decl.arity.bound) {
      if (!sig.varsorts_.count(pair.first)) {
        err(Kind::UndeclaredVarSort, "opsym '" + op.name + "' bound input " +
                                         std::to_string(j) +
                                         " binds undeclared varsort '" +
                                         pair.first.name + "'");
      }
      need_sort(pair.second, "bound input " + std::to_string(j) + " has");
      sig.bar_.insert(pair);
    }
  }

  if (!errors.empty()) return errors;
  return sig;
}

}  // namespace termbind
