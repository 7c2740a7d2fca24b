#pragma once

#include "riocf/riordan.hpp"

#include <utility>
#include <vector>

namespace riocf {

enum class CFKind { Stieltjes, Jacobi, Thron };

// Level coefficients: explicit prefix, then a repeating cycle.
struct CoeffTrack {
    std::vector<YPoly> prefix;
    std::vector<YPoly> cycle;

    YPoly at(size_t i) const;
    static CoeffTrack constant(YPoly v) { return CoeffTrack{{}, {std::move(v)}}; }
};

// alpha: Stieltjes numerators / Jacobi linear coefficients / Thron horizontals.
// beta: Jacobi x^2 numerators / Thron x numerators (level i holds the weight
// feeding level i+1, the classical b_{i+1}); ignored for Stieltjes.
struct CFrac {
    CFKind kind;
    CoeffTrack alpha;
    CoeffTrack beta;
};

CFrac stieltjes_cf(CoeffTrack alpha);
CFrac jacobi_cf(CoeffTrack alpha, CoeffTrack beta);
CFrac thron_cf(CoeffTrack alpha, CoeffTrack beta);

Series cf_expand(const CFrac& c, size_t order);
// same fraction with y replaced by x inside every coefficient before expansion
Series cf_expand_y_as_x(const CFrac& c, size_t order);

CFrac stieltjes_to_jacobi(const CFrac& c);

// same fraction with y evaluated at v in every coefficient
CFrac cf_substitute_y(const CFrac& c, const Rational& v);

// T(level-0 horizontal ay+b, tail u; level-0 numerator cy+d, tail v) as a Jacobi CF
CFrac thron_to_jacobi_level0(const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d, const Rational& u, const Rational& v);

// J(a0, u, u, ...; b0, v, v, ...) expanded, split, and certified Riordan
RiordanPair jfrac_level0_to_riordan(const YPoly& a0, const YPoly& b0, const Rational& u,
                                    const Rational& v, size_t order);

// predicted CF of the inverse of the pair behind J(y+a, c, ...; y+b, d, ...)
CFrac predicted_inverse_jfrac(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d);

// predicted CF of ((1+cx)/(1+ax+bx^2), x/(1+ax+bx^2))^{-1}
CFrac rational_riordan_inverse_jfrac(const Rational& a, const Rational& b,
                                     const Rational& c);

// two-parameter involution family: returns the certified pair and its J-fraction
std::pair<RiordanPair, CFrac> involution_gf(const Rational& a, const Rational& b,
                                            size_t order);

}  // namespace riocf
