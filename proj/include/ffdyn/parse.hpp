#ifndef FFDYN_PARSE_HPP
#define FFDYN_PARSE_HPP

#include <string>

#include "ffdyn/dynmap.hpp"

namespace ffdyn {

// Rational expression in z and t over Q as a bivariate fraction
// (z outer, t inner).  Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'* base ('^' uint)?
//   base   := 'z' | 't' | integer | '(' expr ')'
// No implicit multiplication.  Errors carry the source column.
struct ParsedExpr {
    BiPoly num;
    BiPoly den;
};

ParsedExpr parse_expression(const std::string& text);

RationalMap parse_map(const std::string& text);

// "inf" or a z-free expression
ProjPointK parse_point(const std::string& text);

// "inf" or a z-free polynomial expression, made monic.  Irreducibility is
// certified by the rational-root test through degree 3; higher degrees need
// the trust flag.
Place parse_place(const std::string& text, bool trust_irreducible = false);

// a constant expression
Rational parse_constant(const std::string& text);

// "m,n" or "(m,n)"
Portrait parse_portrait(const std::string& text);

// "poly;poly;inf": squarefree product of the finite parts plus the flag
PlaceSet parse_place_set(const std::string& text);

} // namespace ffdyn

#endif
