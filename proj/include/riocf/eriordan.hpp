#pragma once

#include "riocf/cfrac.hpp"
#include "riocf/riordan.hpp"

#include <vector>

namespace riocf {

// exp(h) for h(0) = 0, exact coefficients; lives with the EGF machinery
// because only exponential arrays need it
Series fps_exp(const Series& h);

// [g, f] with entry (n,k) = (n!/k!) [x^n] g f^k
struct ExpRiordanPair {
    Series g;
    Series f;
};

ExpRiordanPair eriordan_new(Series g, Series f);
Triangle eriordan_matrix(const ExpRiordanPair& e, size_t n);

// bivariate EGF g(x) e^{y f(x)}
Series eriordan_bivariate_egf(const ExpRiordanPair& e, size_t n);

enum class MultiplierKind { Squares, Triangulars, Naturals, Explicit };

// Jacobi CF with a_n = a0 + n*a_step and b_n = b_base*mults(n), n from 1 for b
struct MultiplierFamily {
    YPoly a0;
    Rational a_step;
    Rational b_base;
    MultiplierKind mults = MultiplierKind::Squares;
    std::vector<Rational> explicit_mults;  // used when mults == Explicit
};

// coefficients materialized into the prefix for the first `depth` levels;
// expansions are valid to order `depth`
CFrac multiplier_jacobi(const MultiplierFamily& m, size_t depth);

}  // namespace riocf
