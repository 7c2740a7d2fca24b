#include "riocf/expr.hpp"

#include "riocf/eriordan.hpp"
#include "riocf/errors.hpp"

#include <cctype>
#include <string>

namespace riocf {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprAST run() {
        ExprAST e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("SyntaxError", what + " at byte " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    // an atom can start here: used to detect juxtaposed multiplication
    bool atom_follows() {
        char c = peek();
        return c == 'x' || c == 'y' || c == '(' || c == 's' || c == 'e';
    }

    ExprAST expr() {
        ExprAST left;
        if (eat('-')) {
            left = ExprAST{ExprKind::Neg, {}, 0, {term()}};
        } else {
            left = term();
        }
        while (true) {
            if (eat('+')) {
                left = ExprAST{ExprKind::Add, {}, 0, {std::move(left), term()}};
            } else if (eat('-')) {
                left = ExprAST{ExprKind::Sub, {}, 0, {std::move(left), term()}};
            } else {
                return left;
            }
        }
    }

    ExprAST term() {
        ExprAST left = factor();
        while (true) {
            if (eat('*')) {
                left = ExprAST{ExprKind::Mul, {}, 0, {std::move(left), factor()}};
            } else if (eat('/')) {
                left = ExprAST{ExprKind::Div, {}, 0, {std::move(left), factor()}};
            } else if (atom_follows()) {
                left = ExprAST{ExprKind::Mul, {}, 0, {std::move(left), factor()}};
            } else {
                return left;
            }
        }
    }

    ExprAST factor() {
        ExprAST base = atom();
        if (eat('^')) {
            skip_space();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected exponent");
            unsigned e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
                if (e > 100000) fail("exponent out of range");
                ++pos_;
            }
            return ExprAST{ExprKind::Pow, {}, e, {std::move(base)}};
        }
        return base;
    }

    ExprAST atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return ExprAST{ExprKind::Literal, Rational(v), 0, {}};
        }
        if (c == 'x' || c == 'y') {
            std::string name = word();
            if (name == "x") return ExprAST{ExprKind::X, {}, 0, {}};
            if (name == "y") return ExprAST{ExprKind::Y, {}, 0, {}};
            fail("unknown name '" + name + "'");
        }
        if (c == 's' || c == 'e') {
            std::string name = word();
            ExprKind k;
            if (name == "sqrt") {
                k = ExprKind::Sqrt;
            } else if (name == "exp") {
                k = ExprKind::Exp;
            } else {
                fail("unknown name '" + name + "'");
            }
            if (!eat('(')) fail("expected '('");
            ExprAST inner = expr();
            if (!eat(')')) fail("expected ')'");
            return ExprAST{k, {}, 0, {std::move(inner)}};
        }
        if (eat('(')) {
            ExprAST inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        fail("expected an atom");
    }

    std::string word() {
        skip_space();
        std::string out;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            ++pos_;
        }
        return out;
    }
};

Series eval_node(const ExprAST& n, size_t order, bool ax, bool ay) {
    switch (n.kind) {
        case ExprKind::Literal:
            return Series::constant(YPoly(n.literal), order);
        case ExprKind::X:
            if (!ax) throw PreconditionError("VariableNotAllowed", "x not allowed here");
            return Series::x(order);
        case ExprKind::Y:
            if (!ay) throw PreconditionError("VariableNotAllowed", "y not allowed here");
            return Series::constant(YPoly::y(), order);
        case ExprKind::Add:
            return eval_node(n.kids[0], order, ax, ay) + eval_node(n.kids[1], order, ax, ay);
        case ExprKind::Sub:
            return eval_node(n.kids[0], order, ax, ay) - eval_node(n.kids[1], order, ax, ay);
        case ExprKind::Mul:
            return eval_node(n.kids[0], order, ax, ay) * eval_node(n.kids[1], order, ax, ay);
        case ExprKind::Neg:
            return -eval_node(n.kids[0], order, ax, ay);
        case ExprKind::Pow: {
            Series base = eval_node(n.kids[0], order, ax, ay);
            Series acc = Series::constant(YPoly(1), order);
            unsigned e = n.exponent;
            while (e > 0) {
                if (e & 1u) acc = acc * base;
                base = base * base;
                e >>= 1u;
            }
            return acc;
        }
        case ExprKind::Sqrt:
            return fps_sqrt(eval_node(n.kids[0], order, ax, ay));
        case ExprKind::Exp:
            return fps_exp(eval_node(n.kids[0], order, ax, ay));
        case ExprKind::Div: {
            Series num = eval_node(n.kids[0], order, ax, ay);
            Series den = eval_node(n.kids[1], order, ax, ay);
            if (den.is_zero_series())
                throw PreconditionError("DivisionByZeroSeries", "denominator is 0");
            size_t v = den.valuation();
            if (v == 0) return num / den;
            for (size_t i = 0; i < v; ++i) {
                if (!num.coeff(i).is_zero())
                    throw PreconditionError(
                        "DivisionByNonUnit",
                        "denominator valuation exceeds numerator valuation");
            }
            return num.shifted_down(v) / den.shifted_down(v);
        }
    }
    throw PreconditionError("BadExpression", "unreachable node kind");
}

}  // namespace

ExprAST parse_expr(std::string_view text) { return Parser(text).run(); }

Series eval_expr(const ExprAST& ast, size_t order, bool allow_x, bool allow_y) {
    // headroom so valuation-cancelling division still reaches the asked order
    size_t slack = 16;
    Series out = eval_node(ast, order + slack, allow_x, allow_y);
    if (out.order() < order)
        throw PreconditionError("OrderUnderflow", "division consumed the whole order");
    return out.truncated(order);
}

Series parse_series(std::string_view text, size_t order, bool allow_y) {
    return eval_expr(parse_expr(text), order, true, allow_y);
}

YPoly parse_ypoly(std::string_view text) {
    return eval_expr(parse_expr(text), 1, false, true).coeff(0);
}

}  // namespace riocf
