#include "i1/expr.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "i1/errors.hpp"

namespace i1 {

namespace {

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen,
                      LBracket, RBracket, Comma, End };
    Type type;
    std::string text;   // Number digits or Ident name
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        const std::size_t at = i_;
        if (i_ >= src_.size()) return {Token::Type::End, "", at};
        const char c = src_[i_];
        switch (c) {
            case '+': ++i_; return {Token::Type::Plus, "+", at};
            case '-': ++i_; return {Token::Type::Minus, "-", at};
            case '*': ++i_; return {Token::Type::Star, "*", at};
            case '/': ++i_; return {Token::Type::Slash, "/", at};
            case '^': ++i_; return {Token::Type::Caret, "^", at};
            case '(': ++i_; return {Token::Type::LParen, "(", at};
            case ')': ++i_; return {Token::Type::RParen, ")", at};
            case '[': ++i_; return {Token::Type::LBracket, "[", at};
            case ']': ++i_; return {Token::Type::RBracket, "]", at};
            case ',': ++i_; return {Token::Type::Comma, ",", at};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            Token t{Token::Type::Number, std::string(src_.substr(i_, j - i_)), at};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isalnum(static_cast<unsigned char>(src_[j]))) ++j;
            Token t{Token::Type::Ident, std::string(src_.substr(i_, j - i_)), at};
            i_ = j;
            return t;
        }
        // UTF-8 aliases for the two operator glyphs
        if (src_.substr(i_).starts_with("\xe2\x88\x82")) {  // partial-derivative sign
            i_ += 3;
            return {Token::Type::Ident, "D", at};
        }
        if (src_.substr(i_).starts_with("\xe2\x88\xab")) {  // integral sign
            i_ += 3;
            return {Token::Type::Ident, "Int", at};
        }
        throw SyntaxError(at, std::string("unexpected character '") + c + "'");
    }

private:
    std::string_view src_;
    std::size_t i_ = 0;
};

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr scalar_node(Scalar v) {
    Expr e;
    e.kind = Expr::Kind::Scalar;
    e.value = std::move(v);
    return make(std::move(e));
}

ExprPtr symbol_node(Expr::Sym s, Index i = 0, Index j = 0) {
    Expr e;
    e.kind = Expr::Kind::Symbol;
    e.sym = s;
    e.ei = i;
    e.ej = j;
    return make(std::move(e));
}

ExprPtr binary_node(Expr::Kind k, ExprPtr a, ExprPtr b) {
    Expr e;
    e.kind = k;
    e.lhs = std::move(a);
    e.rhs = std::move(b);
    return make(std::move(e));
}

ExprPtr neg_node(ExprPtr a) {
    Expr e;
    e.kind = Expr::Kind::Neg;
    e.lhs = std::move(a);
    return make(std::move(e));
}

ExprPtr power_node(ExprPtr base, unsigned long n) {
    Expr e;
    e.kind = Expr::Kind::Power;
    e.lhs = std::move(base);
    e.exponent = n;
    return make(std::move(e));
}

class Parser {
public:
    Parser(std::string_view src, Dialect d) : lex_(src), dialect_(d) { advance(); }

    ExprPtr run() {
        ExprPtr e = expr();
        expect(Token::Type::End, "end of input");
        return e;
    }

private:
    void advance() { cur_ = lex_.next(); }

    void expect(Token::Type t, const std::string& what) {
        if (cur_.type != t)
            throw SyntaxError(cur_.pos, "expected " + what + ", got '" + cur_.text + "'");
        advance();
    }

    unsigned long expect_uint(const std::string& what) {
        if (cur_.type != Token::Type::Number)
            throw SyntaxError(cur_.pos, "expected " + what + ", got '" + cur_.text + "'");
        unsigned long v = 0;
        try {
            v = std::stoul(cur_.text);
        } catch (const std::out_of_range&) {
            throw SyntaxError(cur_.pos, what + " out of range");
        }
        advance();
        return v;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (cur_.type == Token::Type::Plus || cur_.type == Token::Type::Minus) {
            const bool minus = cur_.type == Token::Type::Minus;
            advance();
            ExprPtr r = term();
            e = binary_node(Expr::Kind::Sum, std::move(e), minus ? neg_node(std::move(r)) : std::move(r));
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = divided(unary());
        while (cur_.type == Token::Type::Star) {
            advance();
            e = binary_node(Expr::Kind::Product, std::move(e), divided(unary()));
        }
        return e;
    }

    // '/' binds to the factor on its left and takes an integer literal;
    // scalar division is central, so this loses no generality. Folds
    // literal/literal (optionally signed) into a single scalar node.
    ExprPtr divided(ExprPtr e) {
        while (cur_.type == Token::Type::Slash) {
            const std::size_t at = cur_.pos;
            advance();
            const unsigned long den = expect_uint("integer denominator");
            if (den == 0) throw SyntaxError(at, "division by zero");
            const Scalar inv(1, static_cast<long>(den));
            if (e->kind == Expr::Kind::Scalar)
                e = scalar_node(e->value * inv);
            else if (e->kind == Expr::Kind::Neg && e->lhs->kind == Expr::Kind::Scalar)
                e = neg_node(scalar_node(e->lhs->value * inv));
            else
                e = binary_node(Expr::Kind::Product, std::move(e), scalar_node(inv));
        }
        return e;
    }

    ExprPtr unary() {
        if (cur_.type == Token::Type::Minus) {
            advance();
            return neg_node(unary());
        }
        return factor();
    }

    ExprPtr factor() {
        ExprPtr base = primary();
        if (cur_.type == Token::Type::Caret) {
            advance();
            return power_node(std::move(base), expect_uint("nonnegative integer exponent"));
        }
        return base;
    }

    ExprPtr primary() {
        switch (cur_.type) {
            case Token::Type::Number: {
                Scalar v = Scalar::parse(cur_.text);
                advance();
                return scalar_node(std::move(v));
            }
            case Token::Type::LParen: {
                advance();
                ExprPtr e = expr();
                expect(Token::Type::RParen, "')'");
                return e;
            }
            case Token::Type::LBracket: {
                advance();
                ExprPtr a = expr();
                expect(Token::Type::Comma, "','");
                ExprPtr b = expr();
                expect(Token::Type::RBracket, "']'");
                return binary_node(Expr::Kind::Commutator, std::move(a), std::move(b));
            }
            case Token::Type::Ident:
                return identifier();
            default:
                throw SyntaxError(cur_.pos, "expected an operand, got '" + cur_.text + "'");
        }
    }

    ExprPtr identifier() {
        const std::string name = cur_.text;
        const std::size_t at = cur_.pos;
        advance();
        if (name == "H") return symbol_node(Expr::Sym::H);
        if (name == "x") return symbol_node(Expr::Sym::X);
        if (name == "D") return symbol_node(Expr::Sym::D);
        if (name == "Int") return symbol_node(Expr::Sym::Int);
        if (name == "one") return symbol_node(Expr::Sym::One);
        if (name == "Dinv") {
            if (dialect_ != Dialect::B1)
                throw DialectError("Dinv exists only in the B1 dialect");
            return symbol_node(Expr::Sym::Dinv);
        }
        if (name == "e") {
            if (dialect_ != Dialect::I1)
                throw DialectError("matrix units e(i,j) exist only in the I1 dialect");
            expect(Token::Type::LParen, "'('");
            const Index i = expect_uint("row index");
            expect(Token::Type::Comma, "','");
            const Index j = expect_uint("column index");
            expect(Token::Type::RParen, "')'");
            return symbol_node(Expr::Sym::E, i, j);
        }
        throw SyntaxError(at, "unknown symbol '" + name + "'");
    }

    Lexer lex_;
    Dialect dialect_;
    Token cur_{Token::Type::End, "", 0};
};

// A non-integer or negative scalar prints as "p/q" / "-p", which only
// re-parses to a single node when it stands alone or inside parentheses.
bool scalar_needs_parens(const Expr& e) {
    return e.kind == Expr::Kind::Scalar && (!e.value.is_integer() || e.value.sign() < 0);
}

bool needs_parens_in_product(const Expr& e) {
    return e.kind == Expr::Kind::Sum || scalar_needs_parens(e);
}

bool needs_parens_as_power_base(const Expr& e) {
    if (e.kind == Expr::Kind::Commutator || e.kind == Expr::Kind::Symbol) return false;
    if (e.kind == Expr::Kind::Scalar) return scalar_needs_parens(e);
    return true;
}

}  // namespace

ExprPtr parse(std::string_view text, Dialect dialect) { return Parser(text, dialect).run(); }

std::string print(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Scalar:
            return e.value.sign() < 0 ? "-" + (-e.value).str() : e.value.str();
        case Expr::Kind::Symbol:
            switch (e.sym) {
                case Expr::Sym::One: return "one";
                case Expr::Sym::H: return "H";
                case Expr::Sym::X: return "x";
                case Expr::Sym::D: return "D";
                case Expr::Sym::Int: return "Int";
                case Expr::Sym::Dinv: return "Dinv";
                case Expr::Sym::E:
                    return "e(" + std::to_string(e.ei) + "," + std::to_string(e.ej) + ")";
            }
            return "";
        case Expr::Kind::Sum: {
            std::string l = print(*e.lhs);
            // right child rendered as "- r" when negated, parenthesized when
            // it is itself a sum (parsing is left associative)
            if (e.rhs->kind == Expr::Kind::Neg && e.rhs->lhs->kind != Expr::Kind::Neg) {
                const Expr& inner = *e.rhs->lhs;
                std::string r = print(inner);
                if (inner.kind == Expr::Kind::Sum || inner.kind == Expr::Kind::Product)
                    return l + " - (" + r + ")";
                return l + " - " + r;
            }
            std::string r = print(*e.rhs);
            if (e.rhs->kind == Expr::Kind::Sum) r = "(" + r + ")";
            return l + " + " + r;
        }
        case Expr::Kind::Product: {
            std::string l = print(*e.lhs);
            if (needs_parens_in_product(*e.lhs)) l = "(" + l + ")";
            std::string r = print(*e.rhs);
            if (needs_parens_in_product(*e.rhs) || e.rhs->kind == Expr::Kind::Product)
                r = "(" + r + ")";
            return l + " * " + r;
        }
        case Expr::Kind::Power: {
            std::string b = print(*e.lhs);
            if (needs_parens_as_power_base(*e.lhs)) b = "(" + b + ")";
            return b + "^" + std::to_string(e.exponent);
        }
        case Expr::Kind::Commutator:
            return "[" + print(*e.lhs) + ", " + print(*e.rhs) + "]";
        case Expr::Kind::Neg: {
            std::string c = print(*e.lhs);
            if (e.lhs->kind == Expr::Kind::Sum || e.lhs->kind == Expr::Kind::Product ||
                e.lhs->kind == Expr::Kind::Neg)
                return "-(" + c + ")";
            return "-" + c;
        }
    }
    return "";
}

IOp eval_i1(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Scalar: return IOp::from_scalar(e.value);
        case Expr::Kind::Symbol:
            switch (e.sym) {
                case Expr::Sym::One: return IOp::one();
                case Expr::Sym::H: return IOp::h();
                case Expr::Sym::X: return IOp::x();
                case Expr::Sym::D: return IOp::der();
                case Expr::Sym::Int: return IOp::integ();
                case Expr::Sym::E: return IOp::e(e.ei, e.ej);
                case Expr::Sym::Dinv: throw DialectError("Dinv exists only in the B1 dialect");
            }
            return IOp::zero();
        case Expr::Kind::Sum: return eval_i1(*e.lhs) + eval_i1(*e.rhs);
        case Expr::Kind::Product: return mul(eval_i1(*e.lhs), eval_i1(*e.rhs));
        case Expr::Kind::Power: return pow(eval_i1(*e.lhs), e.exponent);
        case Expr::Kind::Commutator: return commutator(eval_i1(*e.lhs), eval_i1(*e.rhs));
        case Expr::Kind::Neg: return -eval_i1(*e.lhs);
    }
    return IOp::zero();
}

B1Elem eval_b1(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Scalar: return B1Elem::term(0, HPoly(e.value));
        case Expr::Kind::Symbol:
            switch (e.sym) {
                case Expr::Sym::One: return B1Elem::one();
                case Expr::Sym::H: return B1Elem::h();
                case Expr::Sym::D: return B1Elem::d();
                case Expr::Sym::Dinv: return B1Elem::dinv();
                case Expr::Sym::Int: return B1Elem::dinv();  // pi(integ) = der^{-1}
                case Expr::Sym::X:
                    // pi(x) = pi(integ H) = (H-1) der^{-1}
                    return B1Elem::term(-1, HPoly(std::vector<Scalar>{Scalar(-1), Scalar(1)}));
                case Expr::Sym::E:
                    throw DialectError("matrix units e(i,j) exist only in the I1 dialect");
            }
            return B1Elem::zero();
        case Expr::Kind::Sum: return eval_b1(*e.lhs) + eval_b1(*e.rhs);
        case Expr::Kind::Product: return b1_mul(eval_b1(*e.lhs), eval_b1(*e.rhs));
        case Expr::Kind::Power: return b1_pow(eval_b1(*e.lhs), e.exponent);
        case Expr::Kind::Commutator: {
            B1Elem a = eval_b1(*e.lhs), b = eval_b1(*e.rhs);
            return b1_mul(a, b) - b1_mul(b, a);
        }
        case Expr::Kind::Neg: return -eval_b1(*e.lhs);
    }
    return B1Elem::zero();
}

PolyX eval_poly(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Scalar: return PolyX::divided_term(0, e.value);
        case Expr::Kind::Symbol:
            if (e.sym == Expr::Sym::One) return PolyX::divided_term(0);
            if (e.sym == Expr::Sym::X) return PolyX::divided_term(1);
            throw DialectError("polynomial arguments allow only x, one and scalars");
        case Expr::Kind::Sum: return eval_poly(*e.lhs) + eval_poly(*e.rhs);
        case Expr::Kind::Product: return eval_poly(*e.lhs) * eval_poly(*e.rhs);
        case Expr::Kind::Power: {
            PolyX base = eval_poly(*e.lhs), r = PolyX::divided_term(0);
            for (unsigned long k = 0; k < e.exponent; ++k) r = r * base;
            return r;
        }
        case Expr::Kind::Commutator:
            throw DialectError("polynomial arguments allow only x, one and scalars");
        case Expr::Kind::Neg: return -eval_poly(*e.lhs);
    }
    return PolyX();
}

}  // namespace i1
