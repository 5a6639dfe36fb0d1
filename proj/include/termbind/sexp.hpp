#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace termbind {

// Minimal s-expressions: atoms (runs of non-space, non-paren characters)
// and lists. Parsing is whitespace-insensitive; printing is canonical
// (single spaces, no line breaks).
struct SExpr {
  std::variant<std::string, std::vector<SExpr>> node;
  // Where this expression started in the source, 1-based; kept for
  // diagnostics, irrelevant to equality or printing.
  int line = 1;
  int col = 1;

  bool is_atom() const { return node.index() == 0; }
  bool is_list() const { return node.index() == 1; }
  const std::string& atom() const { return std::get<0>(node); }
  const std::vector<SExpr>& list() const { return std::get<1>(node); }

  static SExpr make_atom(std::string s) { return SExpr{std::move(s)}; }
  static SExpr make_list(std::vector<SExpr> items) {
    return SExpr{std::move(items)};
  }
};

// Parses exactly one s-expression; trailing non-whitespace is an error.
// Throws ParseError with 1-based line/column on malformed input.
SExpr parse_sexpr(std::string_view text);

std::string print_sexpr(const SExpr& e);

}  // namespace termbind
