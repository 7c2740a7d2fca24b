#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riocf/errors.hpp"
#include "riocf/fps.hpp"

#include <random>
#include <vector>

using namespace riocf;

namespace {

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

Series random_series(std::mt19937_64& rng, size_t order, bool unit_constant) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    Series s(order);
    for (size_t n = 0; n < order; ++n) s.coeff(n) = YPoly(Rational(num(rng), den(rng)));
    if (unit_constant)
        while (s.coeff(0).is_zero()) s.coeff(0) = YPoly(Rational(num(rng), den(rng)));
    return s;
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 7) == 0);
    CHECK(rat_from_string("-3/4") == Rational(-3, 4));
    CHECK(rat_from_string("12") == 12);
    CHECK(rat_to_string(Rational(-3, 4)) == "-3/4");
    CHECK(rat_to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rat_from_string("2x"), ParseError);
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
}

TEST_CASE("ypoly basics") {
    YPoly p = YPoly(1) - YPoly(2) * YPoly::y() + YPoly::y() * YPoly::y();
    CHECK(p.to_string() == "1 - 2*y + y^2");
    CHECK(p.eval(3) == 4);
    CHECK(p.degree() == 2);
    CHECK(YPoly().to_string() == "0");
    CHECK(YPoly(Rational(3, 2)).to_string() == "3/2");
    CHECK((YPoly::y() - YPoly::y()).is_zero());
    CHECK(YPoly(5).is_constant());
    CHECK_FALSE(YPoly::y().is_constant());
}

TEST_CASE("arithmetic matches long division closed forms") {
    CHECK(front(rs({1}, {1, -1}, 5), 5) == rats({1, 1, 1, 1, 1}));
    CHECK(front(rs({1}, {1, -1}, 8) * rs({1}, {1, -1}, 4), 4) == rats({1, 2, 3, 4}));
    CHECK(front(rs({1}, {1, -1, -1}, 6), 6) == rats({1, 1, 2, 3, 5, 8}));
    CHECK_THROWS_AS(rs({1}, {0, 2}, 6), PreconditionError);
}

TEST_CASE("composition") {
    size_t N = 12;
    Series a = rs({1}, {1, -1}, N), b = rs({0, 1}, {1, -1}, N);
    // 1/(1-B) collapses to (1-x)/(1-2x)
    CHECK(front(fps_compose(a, b), N) ==
          rats({1, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024}));
    CHECK(series_eq(fps_compose(a, b), rs({1, -1}, {1, -2}, N), N));
    Series f = rs({0, 1}, {1, -1}, N), gneg = rs({0, 1}, {1, 1}, N);
    CHECK(series_eq(fps_compose(f, gneg), Series::x(N), N));
    CHECK(series_eq(fps_compose(a, Series::x(N)), a, N));
    CHECK_THROWS_AS(fps_compose(a, a), PreconditionError);
}

TEST_CASE("reversion") {
    size_t N = 12;
    Series f = rs({0, 1}, {1, -1}, N);
    Series fbar = fps_reversion(f);
    CHECK(series_eq(fbar, rs({0, 1}, {1, 1}, N), N));
    CHECK(series_eq(fps_compose(f, fbar), Series::x(N), N));

    Series schroeder_col = fps_reversion(rs({0, 1, -2}, {1, -1}, N));
    CHECK(front(schroeder_col, 6) == rats({0, 1, 1, 3, 11, 45}));
    // closed form (1 + x - sqrt(1-6x+x^2))/4
    Series closed = (Series::rational({1, 1}, {1}, N) - fps_sqrt(rs({1, -6, 1}, {1}, N))) *
                    YPoly(Rational(1, 4));
    CHECK(series_eq(schroeder_col, closed, N));

    CHECK(series_eq(fps_reversion(Series::x(N)), Series::x(N), N));
    CHECK_THROWS_AS(fps_reversion(rs({0, 0, 1}, {1}, N)), PreconditionError);
    CHECK_THROWS_AS(fps_reversion(rs({1, 1}, {1}, N)), PreconditionError);
}

TEST_CASE("sqrt") {
    size_t N = 16;
    Series a = rs({1, -6, 1}, {1}, N);
    Series s = fps_sqrt(a);
    CHECK(front(s, 4) == rats({1, -3, -4, -12}));
    CHECK(series_eq(s * s, a, N));
    CHECK(series_eq(fps_sqrt(rs({1}, {1}, N)), rs({1}, {1}, N), N));

    // large Schroeder numbers via the radical closed form
    Series num = rs({1, -1}, {1}, N) - s;
    Series big = num.shifted_down(1) / rs({2}, {1}, N - 1);
    CHECK(front(big, 5) == rats({1, 2, 6, 22, 90}));

    CHECK_THROWS_AS(fps_sqrt(rs({2}, {1}, N)), PreconditionError);
}

TEST_CASE("derivative") {
    size_t N = 10;
    Series g = rs({1}, {1, -1}, N);
    CHECK(series_eq(fps_derivative(g), rs({1}, {1, -2, 1}, N - 1), N - 1));
    CHECK(front(fps_derivative(rs({0, 1, 3, 5}, {1}, N)), 3) == rats({1, 6, 15}));
    CHECK(fps_derivative(Series::x(5)).coeff(0) == YPoly(1));
}

TEST_CASE("y substitution") {
    size_t N = 10;
    // G = 1/(1 - x - x*y)
    Series den(N);
    den.coeff(0) = YPoly(1);
    den.coeff(1) = YPoly(-1) - YPoly::y();
    Series G = Series::constant(YPoly(1), N) / den;
    CHECK(series_eq(ypoly_substitute(G, 0), rs({1}, {1, -1}, N), N));
    CHECK(series_eq(ypoly_substitute(G, 1), rs({1}, {1, -2}, N), N));
    CHECK(series_eq(substitute_y_with_x(G), rs({1}, {1, -1, -1}, N), N));
    Series plain = rs({3, 1}, {1, -2}, N);
    CHECK(series_eq(ypoly_substitute(plain, 7), plain, N));
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(20260814);
    size_t N = 12;
    for (int trial = 0; trial < 20; ++trial) {
        Series a = random_series(rng, N, false);
        Series b = random_series(rng, N, false);
        Series c = random_series(rng, N, true);
        CHECK(series_eq((a * b) * c, a * (b * c), N));
        CHECK(series_eq(a * (b + c), a * b + a * c, N));
        CHECK(series_eq((a / c) * c, a, N));
        Series one = Series::constant(YPoly(1), N);
        CHECK(series_eq(c * (one / c), one, N));
        Series u = random_series(rng, N, false);
        u.coeff(0) = YPoly(1);
        Series r = fps_sqrt(u);
        CHECK(series_eq(r * r, u, N));
    }
}

TEST_CASE("reversion round trips") {
    std::mt19937_64 rng(97);
    const Rational slopes[5] = {1, -1, Rational(1, 2), Rational(-1, 2), 2};
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    size_t N = 10;
    for (int trial = 0; trial < 50; ++trial) {
        Series f(N);
        f.coeff(1) = YPoly(slopes[trial % 5]);
        for (size_t n = 2; n < N; ++n) f.coeff(n) = YPoly(Rational(num(rng), den(rng)));
        Series fbar = fps_reversion(f);
        CHECK(series_eq(fps_compose(f, fbar), Series::x(N), N));
        CHECK(series_eq(fps_compose(fbar, f), Series::x(N), N));
    }
}

TEST_CASE("shift helpers") {
    Series s = rs({1, 2, 3}, {1}, 5);
    CHECK(front(s.shifted_up(2), 5) == rats({0, 0, 1, 2, 3}));
    CHECK(front(rs({0, 0, 7, 1}, {1}, 6).shifted_down(2), 4) == rats({7, 1, 0, 0}));
    CHECK_THROWS_AS(s.shifted_down(1), PreconditionError);
    CHECK(rs({0, 4}, {1}, 6).valuation() == 1);
    CHECK(Series(4).valuation() == 4);
}
