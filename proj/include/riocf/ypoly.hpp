#pragma once

#include "riocf/rational.hpp"

#include <string>
#include <vector>

namespace riocf {

// Dense polynomial in the marker variable y over Rational.
// Canonical form: trailing zero coefficients trimmed; zero == empty.
class YPoly {
public:
    YPoly() = default;
    YPoly(const Rational& constant);  // implicit on purpose: constants embed
    YPoly(int constant);
    static YPoly y();  // the variable itself
    static YPoly from_coeffs(std::vector<Rational> coeffs);

    // degree of zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coeff(size_t i) const;
    Rational constant_term() const { return coeff(0); }

    Rational eval(const Rational& v) const;

    YPoly operator-() const;
    YPoly operator+(const YPoly& o) const;
    YPoly operator-(const YPoly& o) const;
    YPoly operator*(const YPoly& o) const;
    YPoly scaled(const Rational& v) const;
    bool operator==(const YPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const YPoly& o) const { return !(*this == o); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // "0", "3/2", "1 - 2*y + y^2"; round-trips through the expression parser
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace riocf
