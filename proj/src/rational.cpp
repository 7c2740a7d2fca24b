#include "riocf/rational.hpp"

#include "riocf/errors.hpp"

#include <cctype>

namespace riocf {

Integer factorial(unsigned n) {
    Integer out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer out = 1;
    for (unsigned i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;  // exact: product of i+1 consecutive integers
    }
    return out;
}

std::string rat_to_string(const Rational& r) {
    return r.str();
}

Rational rat_from_string(std::string_view text) {
    size_t i = 0;
    auto fail = [&](const char* why) -> Rational {
        throw ParseError("BadRational", std::string(why) + " in \"" + std::string(text) + "\"");
    };
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&]() -> Integer {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail("expected digits");
        Integer v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        return v;
    };
    Integer num = digits();
    Integer den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = digits();
        if (den == 0) fail("zero denominator");
    }
    if (i != text.size()) fail("trailing characters");
    Rational out(num, den);
    return negative ? Rational(-out) : out;
}

}  // namespace riocf
