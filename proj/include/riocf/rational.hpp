#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace riocf {

using Integer = boost::multiprecision::cpp_int;

// Exact rational ground field. cpp_rational keeps the invariants we need:
// denominator > 0, gcd-reduced, zero canonicalized to 0/1.
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// Canonical form: "p" for integers, "p/q" otherwise, sign on the numerator.
std::string rat_to_string(const Rational& r);

// Accepts optional sign, "p" or "p/q". Throws ParseError("BadRational").
Rational rat_from_string(std::string_view text);

}  // namespace riocf
