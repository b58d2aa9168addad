#pragma once

// Expression language for table entries.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' INTEGER)?
//   atom    := NUMBER | 'q' | 'u' | 'v'
//            | 's' '[' parts? ']' | 'h' '[' INTEGER ']' | 'p' '[' INTEGER ']'
//            | '(' expr ')'
//   parts   := INTEGER (',' INTEGER)*      weakly decreasing
//   NUMBER  := INTEGER ('/' INTEGER)?      no spaces around '/'
//
// Multiplication is always explicit: "qs[4]" and "2q" are errors. q stands
// for u*v. s[] and h[0] are 1; p[0] is rejected.

#include <string>
#include <string_view>
#include <vector>

#include "modserre/series.hpp"

namespace modserre {

struct Expr {
    enum class Kind { number, symbol, schur, homogeneous, power_sum, add, sub, mul, neg, pow };

    Kind kind = Kind::number;
    BigRational number;    // number
    char symbol = 0;       // symbol: 'q', 'u' or 'v'
    Partition shape;       // schur
    int index = 0;         // homogeneous / power_sum index, pow exponent
    std::vector<Expr> children;
    int line = 0;
    int column = 0;
};

// Fully parenthesized prefix form, e.g. "(- (* q s[4]) s[2,2])".
std::string to_string(const Expr& e);

// Throws ParseError with a 1-based line/column. `line` and `column` give the
// position of the first character of `text` in a larger document.
Expr parse_expression(std::string_view text, int line = 1, int column = 1);

// Untruncated value of an expression.
SymFunction eval_function(const Expr& e);
SymSeries eval_expression(const Expr& e, const Truncation& trunc);

} // namespace modserre
