#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace termbind {

// Identifiers live in three independent namespaces: sorts, variable sorts
// (varsorts) and operation symbols. The tag keeps them from mixing.
template <class Tag>
struct Ident {
  std::string name;

  auto operator<=>(const Ident&) const = default;
};

struct SortTag {};
struct VarSortTag {};
struct OpSymTag {};

using SortId = Ident<SortTag>;
using VarSortId = Ident<VarSortTag>;
using OpSymId = Ident<OpSymTag>;

// [A-Za-z][A-Za-z0-9_]*
bool is_valid_identifier(std::string_view s);

// A variable name is either a user-chosen identifier or a generated name
// "g$<k>". The "g$" namespace is reserved: user input may not contain '$'.
// Ordering is (is_generated, key): user names sort lexicographically before
// all generated names, generated names sort numerically.
class VarName {
 public:
  VarName() : rep_(std::string()) {}

  static VarName user(std::string name);     // pre: valid identifier
  static VarName generated(std::uint64_t k);

  // Accepts identifiers and "g$<k>"; rejects anything else.
  static std::optional<VarName> parse(std::string_view s);

  bool is_generated() const { return rep_.index() == 1; }
  const std::string& user_name() const { return std::get<0>(rep_); }
  std::uint64_t gen_index() const { return std::get<1>(rep_); }

  std::string str() const;

  auto operator<=>(const VarName&) const = default;

 private:
  explicit VarName(std::variant<std::string, std::uint64_t> rep)
      : rep_(std::move(rep)) {}

  std::variant<std::string, std::uint64_t> rep_;
};

// A variable reference: a varsort together with a name. Two references are
// the same variable only if both components agree.
struct VarRef {
  VarSortId sort;
  VarName name;

  auto operator<=>(const VarRef&) const = default;
};

}  // namespace termbind
