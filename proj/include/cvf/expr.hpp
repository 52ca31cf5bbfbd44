#pragma once

#include <string>

#include "cvf/operators.hpp"

namespace cvf {

// Parsed function expression together with the bookkeeping that canonical
// reconstruction needs: the beta-weight and a conservative tr-degree bound.
struct ParsedFunction {
    RegularFunction fn = RegularFunction::constant(Rational(0));
    int weight = 0;
    int tr_degree = 0;
};

// Parsed operator expression; degree_raise bounds how much the operator can
// push up the tr-degree of whatever it is applied to.
struct ParsedOperator {
    InvariantOperator op = InvariantOperator::mul(RegularFunction::constant(Rational(1)));
    int degree_raise = 0;
};

// Grammar (whitespace-insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' INT)*
//   atom   := NUM ('/' NUM)? | 'beta' | 'I'|'J'|'chi' '(' INT ')'
//           | 'Phi'|'Psi' '(' INT ')' | 'D' | 'Delta' | '(' expr ')'
// Function expressions reject the operator atoms; ParseError carries the
// offending offset.
ParsedFunction parse_function(const std::string& text);
ParsedOperator parse_operator(const std::string& text);

} // namespace cvf
