#include "riocf/ypoly.hpp"

#include <sstream>

namespace riocf {

YPoly::YPoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

YPoly::YPoly(int constant) : YPoly(Rational(constant)) {}

YPoly YPoly::y() {
    YPoly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

YPoly YPoly::from_coeffs(std::vector<Rational> coeffs) {
    YPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Rational YPoly::coeff(size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational YPoly::eval(const Rational& v) const {
    Rational acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
    return acc;
}

void YPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

YPoly YPoly::operator-() const {
    YPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

YPoly YPoly::operator+(const YPoly& o) const {
    YPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

YPoly YPoly::operator-(const YPoly& o) const { return *this + (-o); }

YPoly YPoly::operator*(const YPoly& o) const {
    if (is_zero() || o.is_zero()) return YPoly();
    YPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

YPoly YPoly::scaled(const Rational& v) const {
    if (v == 0) return YPoly();
    YPoly r = *this;
    for (auto& c : r.coeffs_) c *= v;
    return r;
}

std::string YPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        Rational c = coeffs_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0) {
            out << rat_to_string(mag);
        } else {
            if (!unit) out << rat_to_string(mag) << "*";
            out << "y";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace riocf
