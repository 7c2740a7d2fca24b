#pragma once

#include "riocf/ypoly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace riocf {

// Truncated formal power series in x with YPoly coefficients.
// coeffs_.size() == order; coefficient of x^n is trusted only for n < order.
class Series {
public:
    Series() = default;
    explicit Series(size_t order) : coeffs_(order) {}

    static Series zero(size_t order) { return Series(order); }
    static Series constant(const YPoly& c, size_t order);
    static Series x(size_t order);
    static Series from_coeffs(std::vector<YPoly> coeffs);
    // polynomial num/den in x with rational coefficients, expanded to order
    static Series rational(const std::vector<Rational>& num,
                           const std::vector<Rational>& den, size_t order);

    size_t order() const { return coeffs_.size(); }
    const YPoly& coeff(size_t n) const { return coeffs_[n]; }
    YPoly& coeff(size_t n) { return coeffs_[n]; }
    const std::vector<YPoly>& coeffs() const { return coeffs_; }

    bool is_zero_series() const;
    bool has_rational_coeffs() const;  // no y anywhere

    Series truncated(size_t n) const;  // n <= order
    Series padded(size_t n) const;     // append zero coefficients; marks them trusted, caller's burden
    // multiply by x^k, order grows by k (valid: low coefficients are exact)
    Series shifted_up(size_t k) const;
    // divide by x^k; first k coefficients must be zero; order shrinks by k
    Series shifted_down(size_t k) const;
    size_t valuation() const;  // index of first nonzero coefficient; order if none

    std::string to_string() const;  // "1 + 2*x + (1 + y)*x^2" style, for diagnostics

private:
    std::vector<YPoly> coeffs_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Series fps_arith(ArithOp op, const Series& a, const Series& b);
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator/(const Series& a, const Series& b);  // b(0) nonzero rational
Series operator*(const Series& a, const YPoly& c);
Series operator*(const YPoly& c, const Series& a);

bool series_eq(const Series& a, const Series& b, size_t upto);

Series fps_compose(const Series& outer, const Series& inner);
Series fps_reversion(const Series& f);
Series fps_sqrt(const Series& a);
Series fps_derivative(const Series& a);

Series ypoly_substitute(const Series& a, const Rational& v);  // y := v
Series substitute_y_with_x(const Series& a);                  // y := x, same order

}  // namespace riocf
