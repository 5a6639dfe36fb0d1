#pragma once

#include <string>
#include <string_view>

#include "termbind/model.hpp"
#include "termbind/sexp.hpp"
#include "termbind/signature.hpp"
#include "termbind/subst.hpp"
#include "termbind/term.hpp"

namespace termbind {

// Readers throw ParseError (with position) on anything outside the grammar,
// including malformed identifiers and duplicate indices. Writers print the
// canonical form (ascending indices, single spaces); parse(print(x)) == x.

// (v VS NAME)
// (op DELTA ((i TERM) ...) ((j (abs VS NAME TERM)) ...))
Term parse_term(std::string_view text);
std::string print_term(const Term& t);

Abs parse_abs(std::string_view text);
std::string print_abs(const Abs& a);

// (signature (sorts S ...) (varsorts (VS S) ...)
//            (op NAME (result S) (free (i S) ...) (bound (j VS S) ...)) ...)
RawSignature parse_signature(std::string_view text);
std::string print_signature(const Signature& sig);
std::string print_signature(const RawSignature& raw);

// (env ((VS NAME TERM) ...))
Env parse_env(std::string_view text);
std::string print_env(const Env& env);

// (model (carrier C ...) (fun F ((C ...) -> C) ...) (pred P (C ...) ...))
FiniteModel parse_model(std::string_view text);
std::string print_model(const FiniteModel& model);

std::string read_file(const std::string& path);

}  // namespace termbind
