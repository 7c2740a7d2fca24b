#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riocf/cfrac.hpp"
#include "riocf/errors.hpp"

#include <random>
#include <vector>

using namespace riocf;

namespace {

YPoly yp(int c0, int c1 = 0) { return YPoly::from_coeffs({Rational(c0), Rational(c1)}); }

Series rs(const std::vector<int>& num, const std::vector<int>& den, size_t order) {
    std::vector<Rational> n(num.begin(), num.end()), d(den.begin(), den.end());
    return Series::rational(n, d, order);
}

std::vector<Rational> front(const Series& s, size_t k) {
    std::vector<Rational> out;
    for (size_t n = 0; n < k; ++n) {
        REQUIRE(s.coeff(n).is_constant());
        out.push_back(s.coeff(n).constant_term());
    }
    return out;
}

std::vector<Rational> rats(const std::vector<int>& v) {
    return std::vector<Rational>(v.begin(), v.end());
}

Triangle split_matrix(const Series& gf, size_t rows) {
    BivariateSplit s = riordan_from_bivariate(gf);
    REQUIRE(s.is_riordan);
    return riordan_matrix(riordan_new(s.g, s.f), rows);
}

std::vector<Rational> ftra_ints(const Series& gf, int ratio, size_t terms) {
    BivariateSplit s = riordan_from_bivariate(gf);
    REQUIRE(s.is_riordan);
    Series h = rs({1}, {1, -ratio}, gf.order());
    return front(ftra_apply(riordan_new(s.g, s.f), h), terms);
}

}  // namespace

TEST_CASE("classic expansions") {
    CFrac cat = stieltjes_cf(CoeffTrack::constant(YPoly(1)));
    CHECK(front(cf_expand(cat, 8), 6) == rats({1, 1, 2, 5, 14, 42}));

    CFrac mot = jacobi_cf(CoeffTrack::constant(YPoly(1)), CoeffTrack::constant(YPoly(1)));
    CHECK(front(cf_expand(mot, 8), 7) == rats({1, 1, 2, 4, 9, 21, 51}));

    CFrac sch = thron_cf(CoeffTrack::constant(YPoly(1)), CoeffTrack::constant(YPoly(1)));
    CHECK(front(cf_expand(sch, 8), 6) == rats({1, 2, 6, 22, 90, 394}));
}

TEST_CASE("deepening does not disturb low coefficients") {
    CFrac c = jacobi_cf(CoeffTrack{{yp(2, 1)}, {yp(1)}}, CoeffTrack{{yp(3, 1)}, {yp(4)}});
    Series a = cf_expand(c, 9);
    Series b = cf_expand(c, 14);
    CHECK(series_eq(a, b.truncated(9), 9));
}

TEST_CASE("level-0-marked thron array") {
    // T-fraction, all horizontals 1, level-0 rise weight y
    CFrac c = thron_cf(CoeffTrack::constant(YPoly(1)),
                       CoeffTrack{{YPoly::y()}, {YPoly(1)}});
    Series gf = cf_expand(c, 10);
    CHECK(split_matrix(gf, 5) == triangle_from_ints({{1},
                                                     {1, 1},
                                                     {1, 4, 1},
                                                     {1, 13, 7, 1},
                                                     {1, 44, 34, 10, 1}}));
    CHECK(ftra_ints(gf, 3, 10) ==
          rats({1, 4, 22, 130, 790, 4870, 30274, 189202, 1186702, 7461982}));
}

TEST_CASE("jacobi level-0 pair and its inverse prediction") {
    size_t N = 11;
    RiordanPair r = jfrac_level0_to_riordan(yp(2, 1), yp(3, 1), 1, 4, N);
    CHECK(riordan_matrix(r, 5) == triangle_from_ints({{1},
                                                      {2, 1},
                                                      {7, 5, 1},
                                                      {23, 23, 8, 1},
                                                      {88, 101, 48, 11, 1}}));
    CHECK(front(ftra_apply(r, rs({1}, {1, -2}, N)), 5) == rats({1, 4, 21, 109, 586}));

    CFrac pred = predicted_inverse_jfrac(2, 3, 1, 4);
    CHECK(pred.alpha.prefix[0] == yp(-2, 1));
    CHECK(pred.alpha.cycle[0] == yp(-3));
    CHECK(pred.beta.prefix[0] == yp(-1, -1));
    CHECK(pred.beta.cycle[0] == yp(3));
    CHECK(series_eq(cf_expand(pred, 10), bivariate_gf(riordan_inv(r), 10), 10));
}

TEST_CASE("inverse prediction on random parameters") {
    std::mt19937_64 rng(3301);
    std::uniform_int_distribution<int> pick(-3, 3);
    size_t N = 10;
    int done = 0;
    while (done < 20) {
        int a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
        CFrac base = jacobi_cf(CoeffTrack{{yp(a, 1)}, {yp(c)}},
                               CoeffTrack{{yp(b, 1)}, {yp(d)}});
        Series gf = cf_expand(base, N);
        BivariateSplit s = riordan_from_bivariate(gf);
        CHECK(s.is_riordan);
        if (s.f.coeff(1).is_zero()) continue;  // not invertible as a pair
        RiordanPair r = riordan_new(s.g, s.f);
        CFrac pred = predicted_inverse_jfrac(a, b, c, d);
        CHECK(series_eq(cf_expand(pred, N), bivariate_gf(riordan_inv(r), N), N));
        ++done;
    }
}

TEST_CASE("stieltjes contraction") {
    // all-1: Catalan both ways
    CFrac s1 = stieltjes_cf(CoeffTrack::constant(YPoly(1)));
    CFrac j1 = stieltjes_to_jacobi(s1);
    CHECK(j1.alpha.prefix == std::vector<YPoly>{yp(1)});
    CHECK(j1.alpha.cycle == std::vector<YPoly>{yp(2)});
    CHECK(j1.beta.prefix.empty());
    CHECK(j1.beta.cycle == std::vector<YPoly>{yp(1)});
    CHECK(series_eq(cf_expand(s1, 12), cf_expand(j1, 12), 12));

    // alpha = 1,3,2,3,2,... from the biorthogonal moments
    CFrac s2 = stieltjes_cf(CoeffTrack{{yp(1)}, {yp(3), yp(2)}});
    CFrac j2 = stieltjes_to_jacobi(s2);
    CHECK(j2.alpha.prefix == std::vector<YPoly>{yp(1)});
    CHECK(j2.alpha.cycle == std::vector<YPoly>{yp(5)});
    CHECK(j2.beta.prefix == std::vector<YPoly>{yp(3)});
    CHECK(j2.beta.cycle == std::vector<YPoly>{yp(6)});
    CHECK(series_eq(cf_expand(s2, 12), cf_expand(j2, 12), 12));

    // alpha = y,2,1,2,1,...
    CFrac s3 = stieltjes_cf(CoeffTrack{{YPoly::y()}, {yp(2), yp(1)}});
    CFrac j3 = stieltjes_to_jacobi(s3);
    CHECK(j3.alpha.prefix == std::vector<YPoly>{YPoly::y()});
    CHECK(j3.alpha.cycle == std::vector<YPoly>{yp(3)});
    CHECK(j3.beta.prefix == std::vector<YPoly>{YPoly::y().scaled(2)});
    CHECK(j3.beta.cycle == std::vector<YPoly>{yp(2)});
    CHECK(series_eq(cf_expand(s3, 12), cf_expand(j3, 12), 12));

    CHECK_THROWS_AS(stieltjes_to_jacobi(j1), PreconditionError);

    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> w(1, 4), len(0, 3), cyc(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
        CoeffTrack t;
        int p = len(rng), l = cyc(rng);
        for (int i = 0; i < p; ++i) t.prefix.push_back(yp(w(rng)));
        for (int i = 0; i < l; ++i) t.cycle.push_back(yp(w(rng)));
        CFrac s = stieltjes_cf(t);
        CHECK(series_eq(cf_expand(s, 12), cf_expand(stieltjes_to_jacobi(s), 12), 12));
    }
}

TEST_CASE("thron to jacobi at level 0") {
    CFrac inst = thron_to_jacobi_level0(2, 3, -1, 4, 1, 5);
    CHECK(inst.alpha.prefix[0] == yp(7, 1));
    CHECK(inst.alpha.cycle[0] == yp(11));
    CHECK(inst.beta.prefix[0] == yp(24, -6));
    CHECK(inst.beta.cycle[0] == yp(30));
    CFrac tsrc = thron_cf(CoeffTrack{{yp(3, 2)}, {yp(1)}}, CoeffTrack{{yp(4, -1)}, {yp(5)}});
    CHECK(series_eq(cf_expand(tsrc, 12), cf_expand(inst, 12), 12));

    CFrac plain = thron_to_jacobi_level0(0, 1, 0, 1, 1, 1);
    CHECK(plain.alpha.prefix[0] == yp(2));
    CHECK(plain.alpha.cycle[0] == yp(3));
    CHECK(plain.beta.prefix[0] == yp(2));
    CHECK(plain.beta.cycle[0] == yp(2));
    CHECK(front(cf_expand(plain, 6), 5) == rats({1, 2, 6, 22, 90}));

    CHECK(front(cf_expand(thron_to_jacobi_level0(0, 0, 0, 0, 0, 0), 6), 6) ==
          rats({1, 0, 0, 0, 0, 0}));

    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> pick(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        int a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
        int u = pick(rng), v = pick(rng);
        CFrac t = thron_cf(
            CoeffTrack{{YPoly::from_coeffs({Rational(b), Rational(a)})}, {yp(u)}},
            CoeffTrack{{YPoly::from_coeffs({Rational(d), Rational(c)})}, {yp(v)}});
        CFrac j = thron_to_jacobi_level0(a, b, c, d, u, v);
        CHECK(series_eq(cf_expand(t, 12), cf_expand(j, 12), 12));
    }
}

TEST_CASE("rational inverse prediction") {
    size_t N = 10;
    // trivial: J(y; 0) = 1/(1 - y x)
    CFrac triv = rational_riordan_inverse_jfrac(0, 0, 0);
    Series tgf = cf_expand(triv, 6);
    for (size_t n = 0; n < 6; ++n) {
        std::vector<Rational> want(n + 1);
        want[n] = 1;
        CHECK(tgf.coeff(n) == YPoly::from_coeffs(want));
    }

    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> pick(-3, 3);
    auto run = [&](int a, int b, int c) {
        RiordanPair base = riordan_new(rs({1, c}, {1, a, b}, N), rs({0, 1}, {1, a, b}, N));
        Series inv_gf = bivariate_gf(riordan_inv(base), N);
        CHECK(series_eq(cf_expand(rational_riordan_inverse_jfrac(a, b, c), N), inv_gf, N));
    };
    run(1, 1, 2);
    run(-3, 2, 0);
    for (int trial = 0; trial < 10; ++trial) run(pick(rng), pick(rng), pick(rng));
}

TEST_CASE("involution family") {
    auto [r1, c1] = involution_gf(1, 1, 10);
    CHECK(riordan_matrix(r1, 6) == triangle_from_ints({{1},
                                                       {0, -1},
                                                       {0, -1, 1},
                                                       {0, -1, 2, -1},
                                                       {0, -2, 3, -3, 1},
                                                       {0, -4, 6, -6, 4, -1}}));
    CHECK(is_involution(r1, 8));
    CHECK(c1.alpha.prefix[0] == yp(0, -1));

    auto [r2, c2] = involution_gf(2, 2, 10);
    Triangle t2 = riordan_matrix(r2, 6);
    CHECK(t2 == triangle_from_ints({{1},
                                    {2, -1},
                                    {5, -5, 1},
                                    {14, -20, 8, -1},
                                    {43, -76, 44, -11, 1},
                                    {142, -287, 210, -77, 14, -1}}));
    CHECK(is_involution(r2, 8));
    TriangleSums sums = triangle_sums(t2);
    CHECK(front(Series::from_coeffs(sums.alternating), 6) ==
          rats({1, 3, 11, 43, 175, 731}));

    std::mt19937_64 rng(8080);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        int a = pick(rng), b = pick(rng);
        if (b == 0) b = 1;
        auto [r, c] = involution_gf(a, b, 9);
        CHECK(is_involution(r, 8));
    }
}

TEST_CASE("first family of paths with marked level-0 rises") {
    size_t N = 12;
    // ((1, x(1-x)/(1+x)))^{-1}: three equivalent fractions
    RiordanPair base = riordan_new(rs({1}, {1}, N), rs({0, 1, -1}, {1, 1}, N));
    RiordanPair inv = riordan_inv(base);
    CHECK(riordan_matrix(inv, 6) == triangle_from_ints({{1},
                                                        {0, 1},
                                                        {0, 2, 1},
                                                        {0, 6, 4, 1},
                                                        {0, 22, 16, 6, 1},
                                                        {0, 90, 68, 30, 8, 1}}));
    Series gf = bivariate_gf(inv, N);
    CFrac s = stieltjes_cf(CoeffTrack{{YPoly::y()}, {yp(2), yp(1)}});
    CFrac j = jacobi_cf(CoeffTrack{{YPoly::y()}, {yp(3)}},
                        CoeffTrack{{YPoly::y().scaled(2)}, {yp(2)}});
    CFrac t = thron_cf(CoeffTrack{{yp(0)}, {yp(1)}}, CoeffTrack{{YPoly::y()}, {yp(1)}});
    CHECK(series_eq(cf_expand(s, N), gf, N));
    CHECK(series_eq(cf_expand(j, N), gf, N));
    CHECK(series_eq(cf_expand(t, N), gf, N));

    // finite fraction for the base pair itself
    Series base_gf = bivariate_gf(base, 10);
    CFrac finj = jacobi_cf(CoeffTrack{{YPoly::y(), yp(-1)}, {yp(0)}},
                           CoeffTrack{{YPoly::y().scaled(-2)}, {yp(0)}});
    CHECK(series_eq(cf_expand(finj, 10), base_gf, 10));
}

TEST_CASE("signed delannoy and its inverse") {
    size_t N = 12;
    RiordanPair del = riordan_new(rs({1}, {1, 1}, N), rs({0, 1, -1}, {1, 1}, N));
    CHECK(riordan_matrix(del, 6) == triangle_from_ints({{1},
                                                        {-1, 1},
                                                        {1, -3, 1},
                                                        {-1, 5, -5, 1},
                                                        {1, -7, 13, -7, 1},
                                                        {-1, 9, -25, 25, -9, 1}}));
    Series gf = bivariate_gf(del, 10);
    CFrac finj = jacobi_cf(CoeffTrack{{yp(-1, 1)}, {yp(0)}},
                           CoeffTrack{{-YPoly::y()}, {yp(0)}});
    CFrac fint = thron_cf(CoeffTrack{{yp(-1), yp(0), yp(1)}, {yp(0)}},
                          CoeffTrack{{YPoly::y(), yp(-1)}, {yp(0)}});
    CHECK(series_eq(cf_expand(finj, 10), gf, 10));
    CHECK(series_eq(cf_expand(fint, 10), gf, 10));

    RiordanPair inv = riordan_inv(del);
    CHECK(riordan_matrix(inv, 6) == triangle_from_ints({{1},
                                                        {1, 1},
                                                        {2, 3, 1},
                                                        {6, 10, 5, 1},
                                                        {22, 38, 22, 7, 1},
                                                        {90, 158, 98, 38, 9, 1}}));
    CFrac j = jacobi_cf(CoeffTrack{{yp(1, 1)}, {yp(3)}}, CoeffTrack{{yp(1, 1)}, {yp(2)}});
    CHECK(series_eq(cf_expand(j, 10), bivariate_gf(inv, 10), 10));
}

TEST_CASE("doubled horizontal family") {
    size_t N = 12;
    RiordanPair base = riordan_new(rs({1, -1}, {1, 1}, N), rs({0, 1, -1}, {1, 1}, N));
    RiordanPair inv = riordan_inv(base);
    Series gf = bivariate_gf(inv, N);
    CFrac j = jacobi_cf(CoeffTrack{{yp(2, 1)}, {yp(3)}}, CoeffTrack{{yp(2)}, {yp(2)}});
    CFrac t = thron_cf(CoeffTrack{{yp(1, 1)}, {yp(1)}}, CoeffTrack{{yp(1)}, {yp(1)}});
    CHECK(series_eq(cf_expand(j, N), gf, N));
    CHECK(series_eq(cf_expand(t, N), gf, N));

    Series base_gf = bivariate_gf(base, 10);
    CFrac finj = jacobi_cf(CoeffTrack{{yp(-2, 1), yp(1)}, {yp(0)}},
                           CoeffTrack{{yp(-2)}, {yp(0)}});
    CFrac fint = thron_cf(CoeffTrack{{YPoly::y(), yp(-1)}, {yp(0)}},
                          CoeffTrack{{yp(-2), yp(2)}, {yp(0)}});
    CHECK(series_eq(cf_expand(finj, 10), base_gf, 10));
    CHECK(series_eq(cf_expand(fint, 10), base_gf, 10));
}

TEST_CASE("no horizontal step at level 1") {
    size_t N = 12;
    // (g, x g) with g = (3 - x - sqrt(1-6x+x^2))/2
    Series g = (rs({3, -1}, {1}, N) - fps_sqrt(rs({1, -6, 1}, {1}, N))) *
               YPoly(Rational(1, 2));
    RiordanPair r = riordan_new(g, g.shifted_up(1));
    CHECK(riordan_matrix(r, 6) == triangle_from_ints({{1},
                                                      {1, 1},
                                                      {2, 2, 1},
                                                      {6, 5, 3, 1},
                                                      {22, 16, 9, 4, 1},
                                                      {90, 60, 31, 14, 5, 1}}));
    Series gf = bivariate_gf(r, N);
    CFrac j = jacobi_cf(CoeffTrack{{yp(1, 1)}, {yp(3)}}, CoeffTrack{{yp(1)}, {yp(2)}});
    CFrac t = thron_cf(CoeffTrack{{YPoly::y(), yp(0)}, {yp(1)}},
                       CoeffTrack{{}, {yp(1)}});
    CHECK(series_eq(cf_expand(j, N), gf, N));
    CHECK(series_eq(cf_expand(t, N), gf, N));

    RiordanPair inv = riordan_inv(r);
    Series inv_gf = bivariate_gf(inv, 10);
    CFrac jinv = jacobi_cf(CoeffTrack{{yp(-1, 1)}, {yp(2)}}, CoeffTrack{{yp(-1)}, {yp(1)}});
    CHECK(series_eq(cf_expand(jinv, 10), inv_gf, 10));

    // inverse closed form (1/(1 + x c), x/(1 + x c)) with c the Catalan GF
    Series c = (Series::constant(YPoly(1), N + 1) - fps_sqrt(rs({1, -4}, {1}, N + 1)))
                   .shifted_down(1) / rs({2}, {1}, N);
    Series den = Series::constant(YPoly(1), N) + c.shifted_up(1);
    RiordanPair closed =
        riordan_new(Series::constant(YPoly(1), N) / den, Series::x(N) / den);
    CHECK(series_eq(inv_gf, bivariate_gf(closed, 10), 10));
}
