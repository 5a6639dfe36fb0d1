#include "termbind/sexp.hpp"

#include "termbind/errors.hpp"

namespace termbind {

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }

  bool eof() const { return pos >= text.size(); }

  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_space() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                      peek() == '\r')) {
      advance();
    }
  }

  SExpr parse() {
    skip_space();
    if (eof()) fail("unexpected end of input");
    if (peek() == ')') fail("unexpected ')'");
    int start_line = line;
    int start_col = col;
    auto at_start = [&](SExpr e) {
      e.line = start_line;
      e.col = start_col;
      return e;
    };
    if (peek() == '(') {
      advance();
      std::vector<SExpr> items;
      for (;;) {
        skip_space();
        if (eof()) fail("unclosed '('");
        if (peek() == ')') {
          advance();
          return at_start(SExpr::make_list(std::move(items)));
        }
        items.push_back(parse());
      }
    }
    std::string atom;
    while (!eof() && peek() != '(' && peek() != ')' && peek() != ' ' &&
           peek() != '\t' && peek() != '\n' && peek() != '\r') {
      atom.push_back(peek());
      advance();
    }
    return at_start(SExpr::make_atom(std::move(atom)));
  }
};

}  // namespace

SExpr parse_sexpr(std::string_view text) {
  Lexer lx{text};
  SExpr e = lx.parse();
  lx.skip_space();
  if (!lx.eof()) lx.fail("trailing input after expression");
  return e;
}

std::string print_sexpr(const SExpr& e) {
  if (e.is_atom()) return e.atom();
  std::string out = "(";
  bool first = true;
  for (const SExpr& item : e.list()) {
    if (!first) out += " ";
    first = false;
    out += print_sexpr(item);
  }
  out += ")";
  return out;
}

}  // namespace termbind
