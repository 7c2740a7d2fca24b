#include "riocf/fps.hpp"

#include "riocf/errors.hpp"

#include <algorithm>
#include <sstream>

namespace riocf {

Series Series::constant(const YPoly& c, size_t order) {
    Series s(order);
    if (order > 0) s.coeffs_[0] = c;
    return s;
}

Series Series::x(size_t order) {
    Series s(order);
    if (order > 1) s.coeffs_[1] = YPoly(1);
    return s;
}

Series Series::from_coeffs(std::vector<YPoly> coeffs) {
    Series s;
    s.coeffs_ = std::move(coeffs);
    return s;
}

Series Series::rational(const std::vector<Rational>& num,
                        const std::vector<Rational>& den, size_t order) {
    Series n(order), d(order);
    for (size_t i = 0; i < num.size() && i < order; ++i) n.coeffs_[i] = YPoly(num[i]);
    for (size_t i = 0; i < den.size() && i < order; ++i) d.coeffs_[i] = YPoly(den[i]);
    return n / d;
}

bool Series::is_zero_series() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Series::has_rational_coeffs() const {
    for (const auto& c : coeffs_)
        if (!c.is_constant()) return false;
    return true;
}

Series Series::truncated(size_t n) const {
    Series s;
    s.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + std::min(n, coeffs_.size()));
    return s;
}

Series Series::padded(size_t n) const {
    Series s = *this;
    if (n > s.coeffs_.size()) s.coeffs_.resize(n);
    return s;
}

Series Series::shifted_up(size_t k) const {
    Series s(order());
    for (size_t n = k; n < order(); ++n) s.coeffs_[n] = coeffs_[n - k];
    return s;
}

Series Series::shifted_down(size_t k) const {
    for (size_t n = 0; n < k && n < order(); ++n)
        if (!coeffs_[n].is_zero())
            throw PreconditionError("DivisionByNonUnit",
                                    "cannot divide out x^" + std::to_string(k));
    Series s;
    if (order() >= k) s.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
    return s;
}

size_t Series::valuation() const {
    for (size_t n = 0; n < order(); ++n)
        if (!coeffs_[n].is_zero()) return n;
    return order();
}

std::string Series::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (size_t n = 0; n < order(); ++n) {
        if (coeffs_[n].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        std::string c = coeffs_[n].to_string();
        bool wrap = !coeffs_[n].is_constant() || c.find('-') != std::string::npos ||
                    c.find('/') != std::string::npos;
        if (n == 0) {
            out << c;
        } else {
            if (c != "1") out << (wrap ? "(" + c + ")" : c) << "*";
            out << "x";
            if (n > 1) out << "^" << n;
        }
    }
    if (first) out << "0";
    out << " + O(x^" << order() << ")";
    return out.str();
}

static size_t min_order(const Series& a, const Series& b) {
    return std::min(a.order(), b.order());
}

Series operator+(const Series& a, const Series& b) {
    Series r(min_order(a, b));
    for (size_t n = 0; n < r.order(); ++n) r.coeff(n) = a.coeff(n) + b.coeff(n);
    return r;
}

Series operator-(const Series& a, const Series& b) {
    Series r(min_order(a, b));
    for (size_t n = 0; n < r.order(); ++n) r.coeff(n) = a.coeff(n) - b.coeff(n);
    return r;
}

Series operator-(const Series& a) {
    Series r(a.order());
    for (size_t n = 0; n < r.order(); ++n) r.coeff(n) = -a.coeff(n);
    return r;
}

Series operator*(const Series& a, const Series& b) {
    Series r(min_order(a, b));
    for (size_t i = 0; i < r.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (size_t j = 0; i + j < r.order(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.coeff(i + j) = r.coeff(i + j) + a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

Series operator/(const Series& a, const Series& b) {
    size_t N = min_order(a, b);
    if (N == 0) return Series(0);
    const YPoly& b0 = b.coeff(0);
    if (!b0.is_constant() || b0.is_zero())
        throw PreconditionError("DivisionByNonUnit",
                                "divisor constant term must be a nonzero rational");
    Rational inv = Rational(1) / b0.constant_term();
    Series r(N);
    for (size_t n = 0; n < N; ++n) {
        YPoly acc = a.coeff(n);
        for (size_t i = 1; i <= n; ++i) {
            if (b.coeff(i).is_zero()) continue;
            acc = acc - b.coeff(i) * r.coeff(n - i);
        }
        r.coeff(n) = acc.scaled(inv);
    }
    return r;
}

Series operator*(const Series& a, const YPoly& c) {
    Series r(a.order());
    for (size_t n = 0; n < r.order(); ++n) r.coeff(n) = a.coeff(n) * c;
    return r;
}

Series operator*(const YPoly& c, const Series& a) { return a * c; }

Series fps_arith(ArithOp op, const Series& a, const Series& b) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw PreconditionError("BadOp", "unknown arithmetic op");
}

bool series_eq(const Series& a, const Series& b, size_t upto) {
    if (a.order() < upto || b.order() < upto) return false;
    for (size_t n = 0; n < upto; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

Series fps_compose(const Series& outer, const Series& inner) {
    size_t N = min_order(outer, inner);
    if (N > 0 && !inner.coeff(0).is_zero())
        throw PreconditionError("NonzeroConstantInner",
                                "inner series must have zero constant term");
    // Horner: coefficients of outer beyond index N-1 only affect x^{>=N}
    Series r(N);
    Series in = inner.truncated(N);
    for (size_t j = N; j-- > 0;) {
        r = r * in;
        r.coeff(0) = r.coeff(0) + outer.coeff(j);
    }
    return r;
}

static unsigned newton_rounds(size_t order) {
    unsigned bits = 0;
    for (size_t v = order; v > 0; v >>= 1) ++bits;
    return bits + 2;
}

Series fps_reversion(const Series& f) {
    size_t N = f.order();
    if (N < 2 || !f.coeff(0).is_zero() || !f.coeff(1).is_constant() ||
        f.coeff(1).is_zero())
        throw PreconditionError(
            "NotReversible", "need f(0) = 0 and a nonzero rational linear coefficient");
    Rational f1 = f.coeff(1).constant_term();
    // Work one order above the target: the top coefficient of the padded input is
    // a placeholder, and because every iterate has zero constant term the
    // resulting garbage never reaches indices below N.
    size_t M = N + 1;
    Series fpad = f.padded(M);
    Series fprime = fps_derivative(fpad).padded(M);
    Series g = Series::x(M) * YPoly(Rational(1) / f1);
    for (unsigned it = 0; it < newton_rounds(M); ++it) {
        Series err = fps_compose(fpad, g) - Series::x(M);
        Series der = fps_compose(fprime, g);
        g = g - err / der;
    }
    g = g.truncated(N);
    if (!series_eq(fps_compose(f, g), Series::x(N), N))
        throw PreconditionError("NotReversible", "Newton iteration did not converge");
    return g;
}

Series fps_sqrt(const Series& a) {
    size_t N = a.order();
    if (N == 0) return Series(0);
    if (a.coeff(0) != YPoly(1))
        throw PreconditionError("BadConstantTerm", "square root needs constant term 1");
    Series s = Series::constant(YPoly(1), N);
    YPoly half{Rational(1, 2)};
    for (unsigned it = 0; it < newton_rounds(N); ++it) s = (s + a / s) * half;
    return s;
}

Series fps_derivative(const Series& a) {
    if (a.order() == 0) return Series(0);
    Series r(a.order() - 1);
    for (size_t n = 0; n < r.order(); ++n)
        r.coeff(n) = a.coeff(n + 1).scaled(Rational(static_cast<unsigned>(n) + 1));
    return r;
}

Series ypoly_substitute(const Series& a, const Rational& v) {
    Series r(a.order());
    for (size_t n = 0; n < r.order(); ++n) r.coeff(n) = YPoly(a.coeff(n).eval(v));
    return r;
}

Series substitute_y_with_x(const Series& a) {
    Series r(a.order());
    for (size_t n = 0; n < a.order(); ++n) {
        const auto& cs = a.coeff(n).coeffs();
        for (size_t j = 0; j < cs.size() && n + j < r.order(); ++j) {
            if (cs[j] == 0) continue;
            r.coeff(n + j) = r.coeff(n + j) + YPoly(cs[j]);
        }
    }
    return r;
}

}  // namespace riocf
