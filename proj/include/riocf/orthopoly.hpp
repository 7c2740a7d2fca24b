#pragma once

#include "riocf/cfrac.hpp"
#include "riocf/riordan.hpp"

#include <vector>

namespace riocf {

enum class RecurrenceKind { Orthogonal, LaurentBiorthogonal };

// Orthogonal: P_n = (x - a) P_{n-1} - b P_{n-2}, numerators perturbed by
// (1 + alpha x + beta x^2). Laurent biorthogonal: P_n = (x + s) P_{n-1} - t x P_{n-2}.
struct RecurrenceSpec {
    RecurrenceKind kind = RecurrenceKind::Orthogonal;
    Rational a, b;
    Rational alpha, beta;
    Rational s, t;
};

RecurrenceSpec orthogonal_spec(Rational a, Rational b, Rational alpha = 0,
                               Rational beta = 0);
RecurrenceSpec lbp_spec(Rational s, Rational t);

// Riordan pair whose row n lists the coefficients of P_n
RiordanPair coefficient_array(const RecurrenceSpec& r, size_t order);

// recurrence iterated directly, for cross-checks against the array rows
std::vector<std::vector<Rational>> recurrence_polynomials(const RecurrenceSpec& r,
                                                          size_t n);

// first column of the inverted coefficient array
std::vector<Rational> moments(const RecurrenceSpec& r, size_t n);

struct LbpMomentCfs {
    CFrac thron;
    CFrac stieltjes;
    CFrac jacobi;
};

// Exact for (s,t) = (1,3). Other parameters follow the same coefficient
// pattern but are only conjectural: gated behind allow_conjectural, and the
// caller is expected to compare against moments().
LbpMomentCfs lbp_moment_cfs(const Rational& s, const Rational& t,
                            bool allow_conjectural = false);

}  // namespace riocf
