#pragma once

#include <string_view>

#include "nsr/fol/formula.hpp"

namespace nsr::fol {

// Parses one sentence of the FOL dialect:
//
//   tokens      all exists . ( ) , & | - -> <->  identifiers [A-Za-z_][A-Za-z0-9_]*
//   precedence  - binds tightest, then &, then |, then -> (right assoc), then <->
//   quantifiers `all x.` / `exists x.`; `all x y.` desugars to nesting. The body
//               is the immediately following parenthesized group if one follows,
//               otherwise it extends to the end of the expression.
//
// An identifier in term position is a variable when an enclosing quantifier
// binds it. Unbound identifiers shaped like individual variables (a single
// lowercase letter plus optional digits, e.g. x, y, z2) are rejected as
// UnboundVariable; every other unbound identifier is a constant, so returned
// sentences are always closed. `<`, `>`, `=` outside `->`/`<->` are rejected
// as ForbiddenSymbol, and `Name()` as EmptyPredicate.
//
// Throws SyntaxError; never returns null.
FormulaPtr parse_formula(std::string_view text);

}  // namespace nsr::fol
