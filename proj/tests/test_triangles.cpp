#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riocf/errors.hpp"
#include "riocf/lattice.hpp"
#include "riocf/triangles.hpp"

#include <random>
#include <vector>

using namespace riocf;

namespace {

Series rs(const std::vector<int>& num, const std::vector<int>& den, size_t order) {
    std::vector<Rational> n(num.begin(), num.end()), d(den.begin(), den.end());
    return Series::rational(n, d, order);
}

std::vector<Rational> rats(const std::vector<long long>& v) {
    return std::vector<Rational>(v.begin(), v.end());
}

std::vector<Rational> consts(const std::vector<YPoly>& v) {
    std::vector<Rational> out;
    for (const YPoly& p : v) {
        REQUIRE(p.is_constant());
        out.push_back(p.constant_term());
    }
    return out;
}

YPoly row_poly(const Triangle& t, size_t n) {
    std::vector<Rational> c;
    for (size_t k = 0; k <= n; ++k) c.push_back(t.at(n, k).constant_term());
    return YPoly::from_coeffs(c);
}

RiordanPair random_pair(std::mt19937_64& rng, size_t order) {
    std::uniform_int_distribution<int> coef(-3, 3), nz(1, 3);
    auto poly = [&](bool unit_head, bool zero_head) {
        std::vector<Rational> v;
        v.push_back(zero_head ? 0 : (unit_head ? 1 : nz(rng)));
        for (int i = 0; i < 3; ++i) v.emplace_back(coef(rng));
        return v;
    };
    std::vector<Rational> g_num = poly(false, false);
    std::vector<Rational> f_num = poly(true, true);
    f_num[1] = nz(rng);
    return riordan_new(Series::rational(g_num, poly(true, false), order),
                       Series::rational(f_num, poly(true, false), order));
}

}  // namespace

TEST_CASE("named triangles") {
    CHECK(named_triangle("binomial", 5) ==
          triangle_from_ints({{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}}));
    CHECK(named_triangle("narayana", 6) == triangle_from_ints({{1},
                                                               {1, 1},
                                                               {1, 3, 1},
                                                               {1, 6, 6, 1},
                                                               {1, 10, 20, 10, 1},
                                                               {1, 15, 50, 50, 15, 1}}));
    CHECK(named_triangle("narayana_shifted", 6) ==
          triangle_from_ints({{1},
                              {0, 1},
                              {0, 1, 1},
                              {0, 1, 3, 1},
                              {0, 1, 6, 6, 1},
                              {0, 1, 10, 20, 10, 1}}));
    CHECK(named_triangle("nb_product", 6) ==
          triangle_from_ints({{1},
                              {2, 1},
                              {5, 5, 1},
                              {14, 21, 9, 1},
                              {42, 84, 56, 14, 1},
                              {132, 330, 300, 120, 20, 1}}));
    CHECK(named_triangle("nb_conjugate", 6) ==
          triangle_from_ints({{1},
                              {1, 1},
                              {2, 3, 1},
                              {4, 9, 6, 1},
                              {9, 26, 26, 10, 1},
                              {21, 75, 100, 60, 15, 1}}));
    CHECK(named_triangle("delannoy_signed", 6) ==
          triangle_from_ints({{1},
                              {-1, 1},
                              {1, -3, 1},
                              {-1, 5, -5, 1},
                              {1, -7, 13, -7, 1},
                              {-1, 9, -25, 25, -9, 1}}));
    CHECK(named_triangle("schroeder_peaks", 6) ==
          triangle_from_ints({{1},
                              {1, 1},
                              {3, 2, 1},
                              {11, 7, 3, 1},
                              {45, 28, 12, 4, 1},
                              {197, 121, 52, 18, 5, 1}}));
    CHECK_THROWS_AS(named_triangle("leibniz", 4), PreconditionError);
    CHECK_THROWS_AS(named_triangle("binomial", 65), PreconditionError);
}

TEST_CASE("triangle algebra") {
    Triangle b = named_triangle("binomial", 7);
    Triangle nar = named_triangle("narayana", 7);
    CHECK(triangle_mul(nar, b) == named_triangle("nb_product", 7));
    CHECK(triangle_mul(triangle_inv(b), triangle_mul(nar, b)) ==
          named_triangle("nb_conjugate", 7));
    CHECK(triangle_mul(b, triangle_inv(b)) == identity_triangle(7));

    Triangle zero_diag = triangle_from_ints({{1}, {1, 0}, {1, 1, 1}});
    CHECK_THROWS_AS(triangle_inv(zero_diag), PreconditionError);

    // matrix homomorphism of the Riordan group operations
    std::mt19937_64 rng(90125);
    for (int trial = 0; trial < 10; ++trial) {
        RiordanPair r1 = random_pair(rng, 9);
        RiordanPair r2 = random_pair(rng, 9);
        Triangle m1 = riordan_matrix(r1, 8);
        Triangle m2 = riordan_matrix(r2, 8);
        CHECK(riordan_matrix(riordan_mul(r1, r2), 8) == triangle_mul(m1, m2));
        CHECK(riordan_matrix(riordan_inv(r1), 8) == triangle_inv(m1));
    }
}

TEST_CASE("narayana fraction suite") {
    NarayanaCfSuite s = narayana_cf_suite();
    Triangle nar = named_triangle("narayana", 9);
    Series jn = cf_expand(s.jacobi, 9);
    for (size_t n = 0; n < 9; ++n) CHECK(jn.coeff(n) == row_poly(nar, n));

    CHECK(series_eq(cf_expand(s.thron, 9), jn, 9));
    Series rej = cf_expand(s.thron_rejected, 9);
    CHECK(series_eq(rej, jn, 4));
    CHECK_FALSE(series_eq(rej, jn, 5));  // the two printed tails part at x^4

    Series shifted = cf_expand(s.shifted_thron, 9);
    CHECK(series_eq(shifted, triangle_to_bivariate(named_triangle("narayana_shifted", 9), 9),
                    9));

    Series q1 = cf_expand(s.little_q_stieltjes, 9);
    CHECK(series_eq(q1, cf_expand(s.little_q_thron, 9), 9));
    CHECK(series_eq(q1, cf_expand(s.little_q_jacobi, 9), 9));
    CHECK(q1.coeff(0) == YPoly(1));
    CHECK(q1.coeff(1) == YPoly(1));
    CHECK(q1.coeff(2) == YPoly::from_coeffs({2, 1}));
    CHECK(q1.coeff(3) == YPoly::from_coeffs({5, 5, 1}));
    CHECK(q1.coeff(4) == YPoly::from_coeffs({14, 21, 9, 1}));
    CHECK(q1.coeff(5) == YPoly::from_coeffs({42, 84, 56, 14, 1}));

    CHECK(series_eq(cf_expand(s.nb_product_jacobi, 8),
                    triangle_to_bivariate(named_triangle("nb_product", 8), 8), 8));
    CHECK(series_eq(cf_expand(s.nb_product_thron, 8),
                    triangle_to_bivariate(named_triangle("nb_product", 8), 8), 8));
    CHECK(series_eq(cf_expand(s.nb_conjugate_jacobi, 8),
                    triangle_to_bivariate(named_triangle("nb_conjugate", 8), 8), 8));
}

TEST_CASE("conjugate triangle sequences") {
    Triangle conj = named_triangle("nb_conjugate", 10);
    TriangleSums sums = triangle_sums(conj);
    for (size_t n = 0; n < 7; ++n) {
        CHECK(conj.at(n, 0) ==
              count_weighted_paths(PathKind::Motzkin, static_cast<unsigned>(n), {}));
    }
    std::vector<Rational> rows = consts(sums.row);
    rows.resize(7);
    CHECK(rows == rats({1, 2, 6, 20, 72, 272, 1064}));
    std::vector<Rational> diag = consts(sums.diagonal);
    diag.resize(9);
    CHECK(diag == schroeder_alternating_transform(9));
}

TEST_CASE("transforms") {
    CHECK(binomial_transform(rats({1, 1, 1, 1}), TransformDirection::Forward) ==
          rats({1, 2, 4, 8}));
    CHECK(binomial_transform(rats({1, 1, 3, 13, 75}), TransformDirection::Forward) ==
          rats({1, 2, 6, 26, 150}));
    std::mt19937_64 rng(1999);
    std::uniform_int_distribution<int> pick(-20, 20);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> seq;
        for (int i = 0; i < 8; ++i) seq.emplace_back(pick(rng));
        CHECK(binomial_transform(binomial_transform(seq, TransformDirection::Forward),
                                 TransformDirection::Inverse) == seq);
    }

    CHECK(large_schroeder_numbers(7) == rats({1, 2, 6, 22, 90, 394, 1806}));
    CHECK(schroeder_alternating_transform(9) ==
          rats({1, 1, 3, 7, 19, 53, 153, 453, 1367}));
}

TEST_CASE("alternating fraction identity") {
    NarayanaCfSuite s = narayana_cf_suite();
    Series alt = cf_expand(s.alternating_thron, 10);
    std::vector<Rational> tr = schroeder_alternating_transform(9);
    CHECK(alt.coeff(0) == YPoly(1));
    for (size_t n = 0; n < 9; ++n) CHECK(alt.coeff(n + 1) == YPoly(tr[n]));
}

TEST_CASE("diagonal sums as y-to-x substitution") {
    NarayanaCfSuite s = narayana_cf_suite();
    Series direct = cf_expand_y_as_x(s.nb_conjugate_jacobi, 10);
    CHECK(series_eq(direct, substitute_y_with_x(cf_expand(s.nb_conjugate_jacobi, 10)),
                    10));
    TriangleSums sums = triangle_sums(named_triangle("nb_conjugate", 10));
    for (size_t n = 0; n < 10; ++n) CHECK(direct.coeff(n) == sums.diagonal[n]);
}

TEST_CASE("schroeder peaks row sums") {
    Triangle t = named_triangle("schroeder_peaks", 7);
    TriangleSums sums = triangle_sums(t);
    std::vector<Rational> rows = consts(sums.row);
    CHECK(rows == rats({1, 2, 6, 22, 90, 394, 1806}));
    std::vector<Rational> col0;
    for (size_t n = 0; n < 7; ++n) col0.push_back(t.at(n, 0).constant_term());
    CHECK(col0 == rats({1, 1, 3, 11, 45, 197, 903}));
}
