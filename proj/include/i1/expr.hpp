#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "i1/b1.hpp"
#include "i1/iop.hpp"
#include "i1/polyx.hpp"

namespace i1 {

enum class Dialect { I1, B1 };

/// Surface syntax for operator expressions.
///
///   expr    := term (('+'|'-') term)*
///   term    := unary (('*' unary) | ('/' integer))*
///   unary   := '-' unary | factor
///   factor  := primary ('^' integer)?
///   primary := integer | 'H' | 'x' | 'D' | 'Int' | 'Dinv' | 'one'
///            | 'e' '(' integer ',' integer ')' | '(' expr ')' | '[' expr ',' expr ']'
///
/// Juxtaposition is never multiplication. '/' takes a scalar literal on the
/// right and folds into a scalar factor, so "x^2/2" and "3/5" work without a
/// division node. 'Dinv' only parses in the B1 dialect, 'e(i,j)' only in I1.
/// UTF-8 aliases for D and Int are accepted.
struct Expr {
    enum class Kind { Scalar, Symbol, Sum, Product, Power, Commutator, Neg };
    enum class Sym { One, H, X, D, Int, Dinv, E };

    Kind kind;
    Scalar value;                     // Kind::Scalar
    Sym sym = Sym::One;               // Kind::Symbol
    Index ei = 0, ej = 0;             // Sym::E
    unsigned long exponent = 0;       // Kind::Power
    std::shared_ptr<const Expr> lhs;  // child / left child / power base
    std::shared_ptr<const Expr> rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse(std::string_view text, Dialect dialect);

/// Canonical printing; parse(print(e), dialect) reproduces e node for node.
std::string print(const Expr& e);

IOp eval_i1(const Expr& e);
B1Elem eval_b1(const Expr& e);

/// Commutative evaluation for polynomial arguments: only x, one and scalars
/// are admitted; the result is converted to the divided-power basis.
PolyX eval_poly(const Expr& e);

inline IOp parse_i1(std::string_view text) { return eval_i1(*parse(text, Dialect::I1)); }
inline B1Elem parse_b1(std::string_view text) { return eval_b1(*parse(text, Dialect::B1)); }
inline PolyX parse_poly(std::string_view text) { return eval_poly(*parse(text, Dialect::I1)); }

}  // namespace i1
