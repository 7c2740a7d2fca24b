#pragma once

#include "riocf/fps.hpp"

#include <string_view>
#include <vector>

namespace riocf {

// expr   := '-'? term (('+'|'-') term)*
// term   := factor (('*'|'/') factor | factor')*      (juxtaposition binds like '*',
//                                                      second operand must not be a number)
// factor := atom ('^' uint)?
// atom   := uint | 'x' | 'y' | '(' expr ')' | 'sqrt' '(' expr ')' | 'exp' '(' expr ')'
//
// Rationals are spelled as quotients ("3/4"); division is uniform, so the two
// readings agree.
enum class ExprKind { Literal, X, Y, Add, Sub, Mul, Div, Neg, Pow, Sqrt, Exp };

struct ExprAST {
    ExprKind kind = ExprKind::Literal;
    Rational literal;
    unsigned exponent = 0;
    std::vector<ExprAST> kids;
};

// Throws ParseError("SyntaxError", message carrying the byte offset).
ExprAST parse_expr(std::string_view text);

// Evaluates to a truncated series. sqrt needs constant term 1, exp needs
// constant term 0; division cancels a common valuation when the denominator
// has none of its own. Disallowed variables raise
// PreconditionError("VariableNotAllowed").
Series eval_expr(const ExprAST& ast, size_t order, bool allow_x = true,
                 bool allow_y = true);

Series parse_series(std::string_view text, size_t order, bool allow_y = true);

// For continued-fraction coefficients: y only, result must be a polynomial.
YPoly parse_ypoly(std::string_view text);

}  // namespace riocf
