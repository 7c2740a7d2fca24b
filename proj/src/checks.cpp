#include "riocf/checks.hpp"

#include "riocf/eriordan.hpp"
#include "riocf/errors.hpp"
#include "riocf/expr.hpp"
#include "riocf/lattice.hpp"
#include "riocf/orthopoly.hpp"
#include "riocf/production.hpp"
#include "riocf/seq_table.hpp"
#include "riocf/triangles.hpp"

#include <functional>

namespace riocf {

namespace {

struct Recorder {
    std::string suite;
    std::vector<CheckResult>* out;

    void run(const std::string& name, const std::function<bool()>& body) {
        CheckResult r{suite, name, false, ""};
        try {
            r.pass = body();
            if (!r.pass) r.detail = "mismatch";
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        out->push_back(std::move(r));
    }
};

YPoly yp(int c0, int c1 = 0) {
    return YPoly::from_coeffs({Rational(c0), Rational(c1)});
}

Series rs(const std::vector<int>& num, const std::vector<int>& den, size_t order) {
    std::vector<Rational> n(num.begin(), num.end()), d(den.begin(), den.end());
    return Series::rational(n, d, order);
}

const std::vector<Integer>& table_terms(const std::string& name) {
    for (const SequenceEntry& e : sequence_table())
        if (e.name == name) return e.terms;
    throw PreconditionError("UnknownName", "no bundled sequence " + name);
}

// first `upto` coefficients are rational constants equal to the given terms
bool seq_front(const Series& s, const std::vector<Integer>& want, size_t upto) {
    if (s.order() < upto || want.size() < upto) return false;
    for (size_t n = 0; n < upto; ++n) {
        if (!s.coeff(n).is_constant()) return false;
        if (s.coeff(n).constant_term() != Rational(want[n])) return false;
    }
    return true;
}

bool seq_table_front(const Series& s, const std::string& name, size_t upto) {
    return seq_front(s, table_terms(name), upto);
}

std::vector<Integer> ints(std::initializer_list<long long> v) {
    return std::vector<Integer>(v.begin(), v.end());
}

// triangle read off the y-expansion of a bivariate GF, rows padded with zeros
Triangle cf_triangle(const CFrac& c, size_t n) {
    Series gf = cf_expand(c, n);
    Triangle t;
    for (size_t r = 0; r < n; ++r) {
        std::vector<YPoly> row;
        for (size_t k = 0; k <= r; ++k) row.emplace_back(gf.coeff(r).coeff(k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

// expand, certify the Riordan split, and materialize the triangle
Triangle split_triangle(const Series& gf, size_t rows) {
    BivariateSplit s = riordan_from_bivariate(gf);
    if (!s.is_riordan)
        throw VerificationError("NotRiordan", "bivariate GF failed the Riordan split");
    return riordan_matrix(riordan_new(s.g, s.f), rows);
}

ProductionMatrix prod_from_ints(const std::vector<std::vector<long long>>& rows) {
    ProductionMatrix p;
    for (const auto& r : rows) {
        std::vector<YPoly> row;
        for (long long v : r) row.emplace_back(Rational(v));
        row.resize(rows.size(), YPoly(0));
        p.entries.push_back(std::move(row));
    }
    return p;
}

Series first_column_gf(const Triangle& t) {
    std::vector<YPoly> c;
    for (size_t n = 0; n < t.order(); ++n) c.push_back(t.at(n, 0));
    return Series::from_coeffs(std::move(c));
}

Triangle head_rows(const Triangle& t, size_t n) {
    Triangle out;
    out.rows.assign(t.rows.begin(), t.rows.begin() + n);
    return out;
}

bool oracle_matches(const CFrac& numeric, unsigned upto) {
    WeightScheme w = scheme_from_cf(numeric);
    PathKind kind = path_kind_for(numeric.kind);
    Series gf = cf_expand(numeric, upto + 1);
    for (unsigned n = 0; n <= upto; ++n) {
        if (count_weighted_paths(kind, n, w) != gf.coeff(n)) return false;
    }
    return true;
}

// shared constructions

CFrac level0_marked_thron() {
    return thron_cf(CoeffTrack::constant(YPoly(1)),
                    CoeffTrack{{YPoly::y()}, {YPoly(1)}});
}

RiordanPair colored_motzkin_pair(size_t order) {
    return jfrac_level0_to_riordan(yp(2, 1), yp(3, 1), 1, 4, order);
}

struct MarkedRiseFamily {
    RiordanPair base;
    RiordanPair inv;
    CFrac s, j, t;
};

MarkedRiseFamily marked_rise_family(size_t order) {
    RiordanPair base =
        riordan_new(rs({1}, {1}, order), rs({0, 1, -1}, {1, 1}, order));
    return MarkedRiseFamily{
        base, riordan_inv(base),
        stieltjes_cf(CoeffTrack{{YPoly::y()}, {yp(2), yp(1)}}),
        jacobi_cf(CoeffTrack{{YPoly::y()}, {yp(3)}},
                  CoeffTrack{{YPoly::y().scaled(2)}, {yp(2)}}),
        thron_cf(CoeffTrack{{yp(0)}, {yp(1)}}, CoeffTrack{{YPoly::y()}, {yp(1)}})};
}

RiordanPair signed_delannoy_pair(size_t order) {
    return riordan_new(rs({1}, {1, 1}, order), rs({0, 1, -1}, {1, 1}, order));
}

CFrac delannoy_inverse_jacobi() {
    return jacobi_cf(CoeffTrack{{yp(1, 1)}, {yp(3)}}, CoeffTrack{{yp(1, 1)}, {yp(2)}});
}

RiordanPair doubled_horizontal_pair(size_t order) {
    return riordan_new(rs({1, -1}, {1, 1}, order), rs({0, 1, -1}, {1, 1}, order));
}

CFrac doubled_jacobi() {
    return jacobi_cf(CoeffTrack{{yp(2, 1)}, {yp(3)}}, CoeffTrack{{yp(2)}, {yp(2)}});
}

CFrac doubled_thron() {
    return thron_cf(CoeffTrack{{yp(1, 1)}, {yp(1)}}, CoeffTrack{{yp(1)}, {yp(1)}});
}

// (g, xg) with g = (3 - x - sqrt(1-6x+x^2))/2: Schroeder paths with no
// horizontal step at level 1
RiordanPair no_h1_pair(size_t order) {
    Series g = (rs({3, -1}, {1}, order) - fps_sqrt(rs({1, -6, 1}, {1}, order))) *
               YPoly(Rational(1, 2));
    return riordan_new(g, g.shifted_up(1));
}

CFrac no_h1_jacobi() {
    return jacobi_cf(CoeffTrack{{yp(1, 1)}, {yp(3)}}, CoeffTrack{{yp(1)}, {yp(2)}});
}

CFrac no_h1_thron() {
    return thron_cf(CoeffTrack{{YPoly::y(), yp(0)}, {yp(1)}}, CoeffTrack{{}, {yp(1)}});
}

CFrac alternating_sum_jacobi() {
    return jacobi_cf(CoeffTrack{{yp(3)}, {yp(2)}}, CoeffTrack::constant(YPoly(2)));
}

Series squares_family_g(size_t order) {
    Series ex = fps_exp(Series::x(order));
    return ex / (Series::constant(YPoly(2), order) - ex);
}

MultiplierFamily multiplier_family(MultiplierKind kind) {
    MultiplierFamily m;
    m.a0 = yp(2, 1);
    m.a_step = 3;
    m.b_base = 2;
    m.mults = kind;
    return m;
}

Series naturals_family_g(size_t order) {
    Series e3 = fps_exp(Series::x(order) * YPoly(Rational(3)));
    Series one = Series::constant(YPoly(1), order);
    return fps_exp((e3 - one) * YPoly(Rational(2, 9)) +
                   Series::x(order) * YPoly(Rational(4, 3)));
}

// the suites

void suite_s1(Recorder& r) {
    r.run("array: level-0-marked schroeder triangle", [] {
        Series gf = cf_expand(level0_marked_thron(), 10);
        return split_triangle(gf, 5) == triangle_from_ints({{1},
                                                            {1, 1},
                                                            {1, 4, 1},
                                                            {1, 13, 7, 1},
                                                            {1, 44, 34, 10, 1}});
    });
    r.run("sequence: schroeder paths with 3-colored level-0 rises", [] {
        Series gf = cf_expand(level0_marked_thron(), 10);
        return seq_table_front(ypoly_substitute(gf, 3), "A155862", 10);
    });
    r.run("ftra route matches the y substitution", [] {
        Series gf = cf_expand(level0_marked_thron(), 10);
        BivariateSplit s = riordan_from_bivariate(gf);
        if (!s.is_riordan) return false;
        Series h = rs({1}, {1, -3}, 10);
        Series via_ftra = ftra_apply(riordan_new(s.g, s.f), h);
        return series_eq(via_ftra, ypoly_substitute(gf, 3), 10);
    });
    r.run("binomial row sums are powers of 2", [] {
        TriangleSums s = triangle_sums(named_triangle("binomial", 10));
        Rational p = 1;
        for (size_t n = 0; n < 10; ++n, p *= 2)
            if (s.row[n] != YPoly(p)) return false;
        return true;
    });
    r.run("binomial diagonal sums are fibonacci", [] {
        TriangleSums s = triangle_sums(named_triangle("binomial", 10));
        const auto& fib = table_terms("A000045");
        for (size_t n = 0; n < 10; ++n)
            if (s.diagonal[n] != YPoly(Rational(fib[n + 1]))) return false;
        return true;
    });
    r.run("binomial matrix is the pascal riordan pair", [] {
        RiordanPair pascal =
            riordan_new(rs({1}, {1, -1}, 8), rs({0, 1}, {1, -1}, 8));
        return riordan_matrix(pascal, 8) == named_triangle("binomial", 8);
    });
}

void suite_s2(Recorder& r) {
    r.run("catalan stieltjes fraction", [] {
        return seq_table_front(cf_expand(stieltjes_cf(CoeffTrack::constant(YPoly(1))), 10),
                               "A000108", 10);
    });
    r.run("motzkin jacobi fraction", [] {
        CFrac mot = jacobi_cf(CoeffTrack::constant(YPoly(1)),
                              CoeffTrack::constant(YPoly(1)));
        return seq_front(cf_expand(mot, 8), ints({1, 1, 2, 4, 9, 21, 51, 127}), 8);
    });
    r.run("schroeder thron fraction", [] {
        CFrac sch = thron_cf(CoeffTrack::constant(YPoly(1)),
                             CoeffTrack::constant(YPoly(1)));
        return seq_table_front(cf_expand(sch, 10), "A006318", 10);
    });
    r.run("large schroeder closed form", [] {
        Series s = parse_series("(1-x-sqrt(1-6*x+x^2))/(2*x)", 10);
        return seq_table_front(s, "A006318", 10);
    });
    r.run("array: schroeder peaks triangle", [] {
        return named_triangle("schroeder_peaks", 6) ==
               triangle_from_ints({{1},
                                   {1, 1},
                                   {3, 2, 1},
                                   {11, 7, 3, 1},
                                   {45, 28, 12, 4, 1},
                                   {197, 121, 52, 18, 5, 1}});
    });
    r.run("production: schroeder peaks", [] {
        return production_matrix(named_triangle("schroeder_peaks", 7)) ==
               prod_from_ints({{1, 1},
                               {2, 1, 1},
                               {4, 2, 1, 1},
                               {8, 4, 2, 1, 1},
                               {16, 8, 4, 2, 1, 1},
                               {32, 16, 8, 4, 2, 1}});
    });
    r.run("oracle: unweighted path counts", [] {
        const auto& cat = table_terms("A000108");
        const auto& sch = table_terms("A006318");
        std::vector<Integer> mot = ints({1, 1, 2, 4, 9, 21, 51});
        for (unsigned n = 0; n <= 6; ++n) {
            if (count_weighted_paths(PathKind::Dyck, n, {}) != YPoly(Rational(cat[n])))
                return false;
            if (count_weighted_paths(PathKind::Schroeder, n, {}) !=
                YPoly(Rational(sch[n])))
                return false;
            if (count_weighted_paths(PathKind::Motzkin, n, {}) !=
                YPoly(Rational(mot[n])))
                return false;
        }
        return true;
    });
}

void suite_s3(Recorder& r) {
    r.run("array: colored motzkin triangle", [] {
        return riordan_matrix(colored_motzkin_pair(11), 5) ==
               triangle_from_ints({{1},
                                   {2, 1},
                                   {7, 5, 1},
                                   {23, 23, 8, 1},
                                   {88, 101, 48, 11, 1}});
    });
    r.run("sequence: colored motzkin counts", [] {
        RiordanPair p = colored_motzkin_pair(11);
        Series via_ftra = ftra_apply(p, rs({1}, {1, -2}, 11));
        Series via_sub = ypoly_substitute(bivariate_gf(p, 11), 2);
        std::vector<Integer> want = ints({1, 4, 21, 109, 586});
        return seq_front(via_ftra, want, 5) && seq_front(via_sub, want, 5);
    });
    r.run("inverse fraction prediction instance", [] {
        RiordanPair p = colored_motzkin_pair(11);
        CFrac pred = predicted_inverse_jfrac(2, 3, 1, 4);
        return series_eq(cf_expand(pred, 10), bivariate_gf(riordan_inv(p), 10), 10);
    });
    r.run("thron to jacobi instance", [] {
        CFrac inst = thron_to_jacobi_level0(2, 3, -1, 4, 1, 5);
        CFrac tsrc = thron_cf(CoeffTrack{{yp(3, 2)}, {yp(1)}},
                              CoeffTrack{{yp(4, -1)}, {yp(5)}});
        return series_eq(cf_expand(tsrc, 12), cf_expand(inst, 12), 12);
    });
    r.run("plain thron contraction reaches the schroeder numbers", [] {
        CFrac plain = thron_to_jacobi_level0(0, 1, 0, 1, 1, 1);
        return seq_table_front(cf_expand(plain, 6), "A006318", 6);
    });
}

void suite_s4(Recorder& r) {
    r.run("array: marked-rise family triangle", [] {
        return riordan_matrix(marked_rise_family(12).inv, 6) ==
               triangle_from_ints({{1},
                                   {0, 1},
                                   {0, 2, 1},
                                   {0, 6, 4, 1},
                                   {0, 22, 16, 6, 1},
                                   {0, 90, 68, 30, 8, 1}});
    });
    r.run("multi-representation: marked-rise family", [] {
        MarkedRiseFamily fam = marked_rise_family(12);
        Series gf = bivariate_gf(fam.inv, 12);
        return series_eq(cf_expand(fam.s, 12), gf, 12) &&
               series_eq(cf_expand(fam.j, 12), gf, 12) &&
               series_eq(cf_expand(fam.t, 12), gf, 12);
    });
    r.run("production: marked-rise family", [] {
        return production_matrix(riordan_matrix(marked_rise_family(8).inv, 7)) ==
               prod_from_ints({{0, 1},
                               {0, 2, 1},
                               {0, 2, 2, 1},
                               {0, 2, 2, 2, 1},
                               {0, 2, 2, 2, 2, 1},
                               {0, 2, 2, 2, 2, 2}});
    });
    r.run("array: signed delannoy triangle", [] {
        return riordan_matrix(signed_delannoy_pair(8), 6) ==
               triangle_from_ints({{1},
                                   {-1, 1},
                                   {1, -3, 1},
                                   {-1, 5, -5, 1},
                                   {1, -7, 13, -7, 1},
                                   {-1, 9, -25, 25, -9, 1}});
    });
    r.run("finite fractions: signed delannoy", [] {
        Series gf = bivariate_gf(signed_delannoy_pair(10), 10);
        CFrac finj = jacobi_cf(CoeffTrack{{yp(-1, 1)}, {yp(0)}},
                               CoeffTrack{{-YPoly::y()}, {yp(0)}});
        CFrac fint = thron_cf(CoeffTrack{{yp(-1), yp(0), yp(1)}, {yp(0)}},
                              CoeffTrack{{YPoly::y(), yp(-1)}, {yp(0)}});
        return series_eq(cf_expand(finj, 10), gf, 10) &&
               series_eq(cf_expand(fint, 10), gf, 10);
    });
    r.run("array: signed delannoy inverse", [] {
        return riordan_matrix(riordan_inv(signed_delannoy_pair(8)), 6) ==
               triangle_from_ints({{1},
                                   {1, 1},
                                   {2, 3, 1},
                                   {6, 10, 5, 1},
                                   {22, 38, 22, 7, 1},
                                   {90, 158, 98, 38, 9, 1}});
    });
    r.run("multi-representation: signed delannoy inverse", [] {
        Series gf = bivariate_gf(riordan_inv(signed_delannoy_pair(12)), 10);
        return series_eq(cf_expand(delannoy_inverse_jacobi(), 10), gf, 10);
    });
    r.run("production: signed delannoy inverse", [] {
        return production_matrix(riordan_matrix(riordan_inv(signed_delannoy_pair(8)), 7)) ==
               prod_from_ints({{1, 1},
                               {1, 2, 1},
                               {1, 2, 2, 1},
                               {1, 2, 2, 2, 1},
                               {1, 2, 2, 2, 2, 1},
                               {1, 2, 2, 2, 2, 2}});
    });
    r.run("multi-representation: doubled horizontals", [] {
        RiordanPair base = doubled_horizontal_pair(12);
        Series gf = bivariate_gf(riordan_inv(base), 12);
        if (!series_eq(cf_expand(doubled_jacobi(), 12), gf, 12)) return false;
        if (!series_eq(cf_expand(doubled_thron(), 12), gf, 12)) return false;
        Series base_gf = bivariate_gf(base, 10);
        CFrac finj = jacobi_cf(CoeffTrack{{yp(-2, 1), yp(1)}, {yp(0)}},
                               CoeffTrack{{yp(-2)}, {yp(0)}});
        CFrac fint = thron_cf(CoeffTrack{{YPoly::y(), yp(-1)}, {yp(0)}},
                              CoeffTrack{{yp(-2), yp(2)}, {yp(0)}});
        return series_eq(cf_expand(finj, 10), base_gf, 10) &&
               series_eq(cf_expand(fint, 10), base_gf, 10);
    });
    r.run("production: doubled horizontals", [] {
        return production_matrix(
                   riordan_matrix(riordan_inv(doubled_horizontal_pair(8)), 7)) ==
               prod_from_ints({{2, 1},
                               {2, 2, 1},
                               {2, 2, 2, 1},
                               {2, 2, 2, 2, 1},
                               {2, 2, 2, 2, 2, 1},
                               {2, 2, 2, 2, 2, 2}});
    });
    r.run("array: no horizontal step at level one", [] {
        return riordan_matrix(no_h1_pair(8), 6) ==
               triangle_from_ints({{1},
                                   {1, 1},
                                   {2, 2, 1},
                                   {6, 5, 3, 1},
                                   {22, 16, 9, 4, 1},
                                   {90, 60, 31, 14, 5, 1}});
    });
    r.run("multi-representation: no horizontal step at level one", [] {
        RiordanPair p = no_h1_pair(12);
        Series gf = bivariate_gf(p, 12);
        if (!series_eq(cf_expand(no_h1_jacobi(), 12), gf, 12)) return false;
        if (!series_eq(cf_expand(no_h1_thron(), 12), gf, 12)) return false;
        Series inv_gf = bivariate_gf(riordan_inv(p), 10);
        CFrac jinv = jacobi_cf(CoeffTrack{{yp(-1, 1)}, {yp(2)}},
                               CoeffTrack{{yp(-1)}, {yp(1)}});
        return series_eq(cf_expand(jinv, 10), inv_gf, 10);
    });
}

void suite_s5(Recorder& r) {
    r.run("array: signed motzkin involution", [] {
        auto [pair, cf] = involution_gf(1, 1, 10);
        return riordan_matrix(pair, 6) == triangle_from_ints({{1},
                                                              {0, -1},
                                                              {0, -1, 1},
                                                              {0, -1, 2, -1},
                                                              {0, -2, 3, -3, 1},
                                                              {0, -4, 6, -6, 4, -1}}) &&
               is_involution(pair, 8);
    });
    r.run("array: signed schroeder involution", [] {
        auto [pair, cf] = involution_gf(2, 2, 10);
        return riordan_matrix(pair, 6) ==
                   triangle_from_ints({{1},
                                       {2, -1},
                                       {5, -5, 1},
                                       {14, -20, 8, -1},
                                       {43, -76, 44, -11, 1},
                                       {142, -287, 210, -77, 14, -1}}) &&
               is_involution(pair, 8);
    });
    r.run("sequence: alternating row sums", [] {
        auto [pair, cf] = involution_gf(2, 2, 10);
        TriangleSums s = triangle_sums(riordan_matrix(pair, 6));
        return seq_table_front(Series::from_coeffs(s.alternating), "A151090", 6);
    });
    r.run("alternating-sum fraction matches the bundled terms", [] {
        return seq_table_front(cf_expand(alternating_sum_jacobi(), 12), "A151090", 12);
    });
    r.run("tridiagonal: symbolic link array", [] {
        size_t N = 11;
        std::vector<Rational> den{1, 1, 1};
        Series num(N);
        num.coeff(0) = YPoly(1);
        num.coeff(1) = yp(1, 1);
        num.coeff(2) = yp(1, 1);
        Series g = num * Series::rational({1}, den, N);
        Series f = Series::rational({0, 1}, den, N);
        Triangle m = riordan_matrix(riordan_inv(riordan_new(g, f)), 10);
        ProductionMatrix p = production_matrix(m);
        if (!is_tridiagonal(p)) return false;
        if (p.at(0, 0) != yp(0, -1) || p.at(1, 0) != yp(0, -1)) return false;
        if (p.at(1, 1) != YPoly(1) || p.at(2, 1) != YPoly(1)) return false;
        CFrac j = tridiagonal_to_jacobi(p);
        return series_eq(cf_expand(j, 8), first_column_gf(m).truncated(8), 8);
    });
}

void suite_s6(Recorder& r) {
    r.run("array: biorthogonal coefficient triangle", [] {
        return riordan_matrix(coefficient_array(lbp_spec(1, 3), 7), 6) ==
               triangle_from_ints({{1},
                                   {-1, 1},
                                   {-1, -3, 1},
                                   {-1, -1, -5, 1},
                                   {-1, 1, 3, -7, 1},
                                   {-1, 3, 7, 11, -9, 1}});
    });
    r.run("array: inverted biorthogonal triangle", [] {
        Triangle inv =
            triangle_inv(riordan_matrix(coefficient_array(lbp_spec(1, 3), 11), 10));
        return head_rows(inv, 6) == triangle_from_ints({{1},
                                                        {1, 1},
                                                        {4, 3, 1},
                                                        {22, 16, 5, 1},
                                                        {142, 102, 32, 7, 1},
                                                        {1006, 718, 226, 52, 9, 1}});
    });
    r.run("sequence: biorthogonal moments", [] {
        std::vector<Integer> want =
            ints({1, 1, 4, 22, 142, 1006, 7570, 59410, 480910});
        std::vector<Rational> m = moments(lbp_spec(1, 3), 9);
        for (size_t n = 0; n < 9; ++n)
            if (m[n] != Rational(want[n])) return false;
        return true;
    });
    r.run("recurrence rows hold", [] {
        for (const RecurrenceSpec& spec :
             {lbp_spec(1, 3), orthogonal_spec(1, 1), orthogonal_spec(2, 2)}) {
            Triangle t = riordan_matrix(coefficient_array(spec, 10), 9);
            auto polys = recurrence_polynomials(spec, 9);
            for (size_t n = 0; n < 9; ++n) {
                polys[n].resize(n + 1);
                for (size_t k = 0; k <= n; ++k)
                    if (t.at(n, k) != YPoly(polys[n][k])) return false;
            }
        }
        return true;
    });
    r.run("moment fractions agree", [] {
        LbpMomentCfs cfs = lbp_moment_cfs(1, 3);
        Series t = cf_expand(cfs.thron, 10);
        if (!series_eq(t, cf_expand(cfs.stieltjes, 10), 10)) return false;
        if (!series_eq(t, cf_expand(cfs.jacobi, 10), 10)) return false;
        std::vector<Rational> m = moments(lbp_spec(1, 3), 9);
        for (size_t n = 0; n < 9; ++n)
            if (t.coeff(n) != YPoly(m[n])) return false;
        return true;
    });
    r.run("bivariate fractions of the inverted array", [] {
        RiordanPair inv = riordan_inv(coefficient_array(lbp_spec(1, 3), 10));
        Series gf = bivariate_gf(inv, 9);
        CFrac j = jacobi_cf(CoeffTrack{{yp(1, 1)}, {YPoly(5)}},
                            CoeffTrack{{yp(3, 1)}, {YPoly(6)}});
        CFrac t = thron_cf(
            CoeffTrack{{YPoly::from_coeffs({0, Rational(2, 3)})}, {YPoly(1)}},
            CoeffTrack{{YPoly::from_coeffs({1, Rational(1, 3)})}, {YPoly(2)}});
        return series_eq(cf_expand(j, 8), gf.truncated(8), 8) &&
               series_eq(cf_expand(t, 9), gf, 9);
    });
    r.run("oracle: motzkin moments", [] {
        std::vector<Rational> m = moments(orthogonal_spec(1, 1), 8);
        for (unsigned n = 0; n < 8; ++n)
            if (count_weighted_paths(PathKind::Motzkin, n, {}) != YPoly(m[n]))
                return false;
        return true;
    });
}

void suite_s7(Recorder& r) {
    r.run("array: squares family triangle", [] {
        Triangle want = triangle_from_ints({{1},
                                            {2, 1},
                                            {6, 4, 1},
                                            {26, 18, 6, 1},
                                            {150, 104, 36, 8, 1},
                                            {1082, 750, 260, 60, 10, 1},
                                            {9366, 6492, 2250, 520, 90, 12, 1}});
        Triangle direct =
            eriordan_matrix(eriordan_new(squares_family_g(12), Series::x(12)), 7);
        Triangle via_cf =
            cf_triangle(multiplier_jacobi(multiplier_family(MultiplierKind::Squares), 12),
                        7);
        return direct == want && via_cf == want;
    });
    r.run("array: triangular family triangle", [] {
        return cf_triangle(
                   multiplier_jacobi(multiplier_family(MultiplierKind::Triangulars), 12),
                   6) == triangle_from_ints({{1},
                                             {2, 1},
                                             {6, 4, 1},
                                             {26, 18, 6, 1},
                                             {146, 104, 36, 8, 1},
                                             {994, 730, 260, 60, 10, 1}});
    });
    r.run("array: naturals family triangle", [] {
        Triangle want = triangle_from_ints({{1},
                                            {2, 1},
                                            {6, 4, 1},
                                            {26, 18, 6, 1},
                                            {142, 104, 36, 8, 1},
                                            {906, 710, 260, 60, 10, 1}});
        Triangle via_cf = cf_triangle(
            multiplier_jacobi(multiplier_family(MultiplierKind::Naturals), 12), 6);
        Triangle closed =
            eriordan_matrix(eriordan_new(naturals_family_g(10), Series::x(10)), 6);
        return via_cf == want && closed == want;
    });
    r.run("sequence: triangular family row sums", [] {
        CFrac cf = cf_substitute_y(
            multiplier_jacobi(multiplier_family(MultiplierKind::Triangulars), 14), 1);
        return seq_table_front(cf_expand(cf, 10), "A230008", 10);
    });
    r.run("first column is the binomial transform of fubini", [] {
        Triangle t =
            eriordan_matrix(eriordan_new(squares_family_g(12), Series::x(12)), 10);
        const auto& a629 = table_terms("A000629");
        const auto& fub = table_terms("A000670");
        std::vector<Rational> col0, fubini;
        for (size_t n = 0; n < 10; ++n) {
            col0.push_back(t.at(n, 0).constant_term());
            if (col0[n] != Rational(a629[n])) return false;
            fubini.emplace_back(fub[n]);
        }
        return binomial_transform(fubini, TransformDirection::Forward) == col0;
    });
    r.run("row sums are the chain counts", [] {
        Triangle t =
            eriordan_matrix(eriordan_new(squares_family_g(12), Series::x(12)), 10);
        TriangleSums s = triangle_sums(t);
        const auto& want = table_terms("A007047");
        for (size_t n = 0; n < 10; ++n)
            if (s.row[n] != YPoly(Rational(want[n]))) return false;
        return true;
    });
    r.run("pascal two ways", [] {
        Series ex = fps_exp(Series::x(10));
        return eriordan_matrix(eriordan_new(ex, Series::x(10)), 8) ==
               named_triangle("binomial", 8);
    });
    r.run("exp production: proposition pair", [] {
        size_t N = 10;
        Series e3 = fps_exp(Series::x(N) * YPoly(Rational(3)));
        Series one = Series::constant(YPoly(1), N);
        Series f = (e3 - one) * YPoly(Rational(1, 3));
        Series xy(N);
        xy.coeff(1) = YPoly::from_coeffs({Rational(4, 3), 1});
        Series g = fps_exp((e3 - one) * YPoly(Rational(2, 9)) + xy);
        ExpProduction za = exp_production_za(g, f);
        if (za.z.coeff(0) != yp(2, 1) || za.z.coeff(1) != YPoly(2)) return false;
        if (za.a.coeff(0) != YPoly(1) || za.a.coeff(1) != YPoly(3)) return false;
        if (!is_tridiagonal(za.p)) return false;
        for (size_t n = 0; n < 6; ++n) {
            if (za.p.at(n, n) != YPoly::from_coeffs({Rational(2 + 3 * n), 1}))
                return false;
            if (n > 0 && za.p.at(n, n - 1) != YPoly(Rational(2 * n))) return false;
            if (n + 1 < za.p.size() && za.p.at(n, n + 1) != YPoly(1)) return false;
        }
        return true;
    });
    r.run("exp production: binomial matrix is bidiagonal", [] {
        size_t N = 10;
        Series ex = fps_exp(Series::x(N));
        ExpProduction pascal = exp_production_za(ex, Series::x(N));
        if (!series_eq(pascal.z, Series::constant(YPoly(1), N - 1), N - 1)) return false;
        if (!series_eq(pascal.a, Series::constant(YPoly(1), N - 1), N - 1)) return false;
        for (size_t n = 0; n < pascal.p.size(); ++n) {
            for (size_t k = 0; k < pascal.p.size(); ++k) {
                YPoly want(k == n || k == n + 1 ? 1 : 0);
                if (pascal.p.at(n, k) != want) return false;
            }
        }
        return pascal.p ==
               production_matrix(eriordan_matrix(eriordan_new(ex, Series::x(N)), N - 1));
    });
}

void suite_s8(Recorder& r) {
    r.run("array: narayana triangle", [] {
        return named_triangle("narayana", 6) ==
               triangle_from_ints({{1},
                                   {1, 1},
                                   {1, 3, 1},
                                   {1, 6, 6, 1},
                                   {1, 10, 20, 10, 1},
                                   {1, 15, 50, 50, 15, 1}});
    });
    r.run("array: narayana-binomial product", [] {
        Triangle want = triangle_from_ints({{1},
                                            {2, 1},
                                            {5, 5, 1},
                                            {14, 21, 9, 1},
                                            {42, 84, 56, 14, 1},
                                            {132, 330, 300, 120, 20, 1}});
        return named_triangle("nb_product", 6) == want &&
               triangle_mul(named_triangle("narayana", 6),
                            named_triangle("binomial", 6)) == want;
    });
    r.run("array: binomial conjugate", [] {
        Triangle want = triangle_from_ints({{1},
                                            {1, 1},
                                            {2, 3, 1},
                                            {4, 9, 6, 1},
                                            {9, 26, 26, 10, 1},
                                            {21, 75, 100, 60, 15, 1}});
        Triangle composed = triangle_mul(triangle_inv(named_triangle("binomial", 6)),
                                         named_triangle("nb_product", 6));
        return named_triangle("nb_conjugate", 6) == want && composed == want;
    });
    r.run("array: little q triangle", [] {
        return cf_triangle(narayana_cf_suite().little_q_jacobi, 6) ==
               triangle_from_ints({{1},
                                   {1, 0},
                                   {2, 1, 0},
                                   {5, 5, 1, 0},
                                   {14, 21, 9, 1, 0},
                                   {42, 84, 56, 14, 1, 0}});
    });
    r.run("little q fractions agree", [] {
        NarayanaCfSuite s = narayana_cf_suite();
        Series a = cf_expand(s.little_q_stieltjes, 9);
        return series_eq(a, cf_expand(s.little_q_thron, 9), 9) &&
               series_eq(a, cf_expand(s.little_q_jacobi, 9), 9);
    });
    r.run("narayana jacobi fraction", [] {
        Series gf = cf_expand(narayana_cf_suite().jacobi, 9);
        Triangle n = named_triangle("narayana", 9);
        for (size_t r2 = 0; r2 < 9; ++r2) {
            std::vector<Rational> c;
            for (size_t k = 0; k <= r2; ++k) c.push_back(n.at(r2, k).constant_term());
            if (gf.coeff(r2) != YPoly::from_coeffs(c)) return false;
        }
        return true;
    });
    r.run("thron tail resolution", [] {
        NarayanaCfSuite s = narayana_cf_suite();
        Series jn = cf_expand(s.jacobi, 9);
        if (!series_eq(cf_expand(s.thron, 9), jn, 9)) return false;
        Series rej = cf_expand(s.thron_rejected, 9);
        return series_eq(rej, jn, 4) && !series_eq(rej, jn, 5);
    });
    r.run("array: shifted narayana", [] {
        Triangle shifted = named_triangle("narayana_shifted", 6);
        if (shifted != triangle_from_ints({{1},
                                           {0, 1},
                                           {0, 1, 1},
                                           {0, 1, 3, 1},
                                           {0, 1, 6, 6, 1},
                                           {0, 1, 10, 20, 10, 1}}))
            return false;
        Series gf = cf_expand(narayana_cf_suite().shifted_thron, 9);
        return series_eq(gf, triangle_to_bivariate(named_triangle("narayana_shifted", 9), 9),
                         9);
    });
    r.run("nb fractions match the triangles", [] {
        NarayanaCfSuite s = narayana_cf_suite();
        Series prod_gf = triangle_to_bivariate(named_triangle("nb_product", 8), 8);
        Series conj_gf = triangle_to_bivariate(named_triangle("nb_conjugate", 8), 8);
        return series_eq(cf_expand(s.nb_product_jacobi, 8), prod_gf, 8) &&
               series_eq(cf_expand(s.nb_product_thron, 8), prod_gf, 8) &&
               series_eq(cf_expand(s.nb_conjugate_jacobi, 8), conj_gf, 8);
    });
    r.run("sequence: schroeder alternating transform", [] {
        std::vector<Rational> tr = schroeder_alternating_transform(9);
        const auto& want = table_terms("A078481");
        for (size_t n = 0; n < 9; ++n)
            if (tr[n] != Rational(want[n])) return false;
        return true;
    });
    r.run("alternating fraction shifts the transform", [] {
        Series alt = cf_expand(narayana_cf_suite().alternating_thron, 10);
        std::vector<Rational> tr = schroeder_alternating_transform(9);
        if (alt.coeff(0) != YPoly(1)) return false;
        for (size_t n = 0; n + 1 < 10; ++n)
            if (alt.coeff(n + 1) != YPoly(tr[n])) return false;
        return true;
    });
    r.run("diagonal sums via y to x substitution", [] {
        Series diag = cf_expand_y_as_x(narayana_cf_suite().nb_conjugate_jacobi, 10);
        TriangleSums s = triangle_sums(named_triangle("nb_conjugate", 10));
        for (size_t n = 0; n < 10; ++n)
            if (diag.coeff(n) != s.diagonal[n]) return false;
        return seq_table_front(diag, "A078481", 10);
    });
    r.run("row sums of the conjugate", [] {
        TriangleSums s = triangle_sums(named_triangle("nb_conjugate", 10));
        const auto& want = table_terms("A071356");
        for (size_t n = 0; n < 10; ++n)
            if (s.row[n] != YPoly(Rational(want[n]))) return false;
        return true;
    });
    r.run("oracle: conjugate first column is motzkin", [] {
        Triangle t = named_triangle("nb_conjugate", 7);
        for (unsigned n = 0; n <= 6; ++n)
            if (count_weighted_paths(PathKind::Motzkin, n, {}) != t.at(n, 0))
                return false;
        return true;
    });
    r.run("transforms: binomial forward and inverse", [] {
        std::vector<Rational> ones(8, 1);
        std::vector<Rational> fwd = binomial_transform(ones, TransformDirection::Forward);
        Rational p = 1;
        for (size_t n = 0; n < 8; ++n, p *= 2)
            if (fwd[n] != p) return false;
        const auto& fub = table_terms("A000670");
        const auto& a629 = table_terms("A000629");
        std::vector<Rational> fubini(fub.begin(), fub.begin() + 8);
        fwd = binomial_transform(fubini, TransformDirection::Forward);
        for (size_t n = 0; n < 8; ++n)
            if (fwd[n] != Rational(a629[n])) return false;
        return binomial_transform(fwd, TransformDirection::Inverse) == fubini;
    });
}

using SuiteFn = void (*)(Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_list() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"s1", suite_s1}, {"s2", suite_s2}, {"s3", suite_s3}, {"s4", suite_s4},
        {"s5", suite_s5}, {"s6", suite_s6}, {"s7", suite_s7}, {"s8", suite_s8}};
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : suite_list()) v.push_back(id);
        return v;
    }();
    return ids;
}

std::vector<CheckResult> run_suite(const std::string& id) {
    for (const auto& [sid, fn] : suite_list()) {
        if (sid == id) {
            std::vector<CheckResult> out;
            Recorder rec{sid, &out};
            fn(rec);
            return out;
        }
    }
    throw PreconditionError("UnknownSuite", "no suite named " + id);
}

std::vector<CheckResult> run_all_suites() {
    std::vector<CheckResult> out;
    for (const auto& [sid, fn] : suite_list()) {
        Recorder rec{sid, &out};
        fn(rec);
    }
    return out;
}

std::vector<NamedCF> numeric_cf_registry() {
    std::vector<NamedCF> reg;
    auto add = [&](const std::string& name, const CFrac& cf) {
        reg.push_back({name, cf});
    };
    auto add_y = [&](const std::string& name, const CFrac& cf, const Rational& v) {
        reg.push_back({name, cf_substitute_y(cf, v)});
    };

    add("catalan stieltjes", stieltjes_cf(CoeffTrack::constant(YPoly(1))));
    add("motzkin jacobi",
        jacobi_cf(CoeffTrack::constant(YPoly(1)), CoeffTrack::constant(YPoly(1))));
    add("schroeder thron",
        thron_cf(CoeffTrack::constant(YPoly(1)), CoeffTrack::constant(YPoly(1))));
    add_y("level-0-marked thron, 1 color", level0_marked_thron(), 1);
    add_y("level-0-marked thron, 3 colors", level0_marked_thron(), 3);

    CFrac colored = jacobi_cf(CoeffTrack{{yp(2, 1)}, {yp(1)}},
                              CoeffTrack{{yp(3, 1)}, {yp(4)}});
    add_y("colored motzkin jacobi, y=1", colored, 1);
    add_y("colored motzkin jacobi, y=2", colored, 2);

    MarkedRiseFamily fam = marked_rise_family(4);
    add_y("marked-rise family stieltjes, y=1", fam.s, 1);
    add_y("marked-rise family jacobi, y=1", fam.j, 1);
    add_y("marked-rise family thron, y=1", fam.t, 1);

    add_y("signed delannoy inverse jacobi, y=1", delannoy_inverse_jacobi(), 1);
    add_y("signed delannoy finite jacobi, y=1",
          jacobi_cf(CoeffTrack{{yp(-1, 1)}, {yp(0)}}, CoeffTrack{{-YPoly::y()}, {yp(0)}}),
          1);
    add_y("doubled horizontals jacobi, y=1", doubled_jacobi(), 1);
    add_y("doubled horizontals thron, y=1", doubled_thron(), 1);
    add_y("no horizontal at level one jacobi, y=1", no_h1_jacobi(), 1);
    add_y("no horizontal at level one thron, y=1", no_h1_thron(), 1);

    add_y("signed motzkin involution, y=1", involution_gf(1, 1, 4).second, 1);
    add_y("signed schroeder involution, y=1", involution_gf(2, 2, 4).second, 1);
    add("alternating-sum jacobi", alternating_sum_jacobi());

    LbpMomentCfs lbp = lbp_moment_cfs(1, 3);
    add("biorthogonal moment thron", lbp.thron);
    add("biorthogonal moment stieltjes", lbp.stieltjes);
    add("biorthogonal moment jacobi", lbp.jacobi);

    NarayanaCfSuite nar = narayana_cf_suite();
    add_y("narayana jacobi, y=1", nar.jacobi, 1);
    add_y("narayana thron, y=1", nar.thron, 1);
    add_y("shifted narayana thron, y=1", nar.shifted_thron, 1);
    add_y("little q stieltjes, y=1", nar.little_q_stieltjes, 1);
    add_y("little q thron, y=1", nar.little_q_thron, 1);
    add_y("little q jacobi, y=1", nar.little_q_jacobi, 1);
    add_y("nb product jacobi, y=1", nar.nb_product_jacobi, 1);
    add_y("nb product thron, y=1", nar.nb_product_thron, 1);
    add_y("nb conjugate jacobi, y=1", nar.nb_conjugate_jacobi, 1);
    add("alternating transform thron", nar.alternating_thron);

    add_y("squares multiplier jacobi, y=1",
          multiplier_jacobi(multiplier_family(MultiplierKind::Squares), 15), 1);
    add_y("triangular multiplier jacobi, y=1",
          multiplier_jacobi(multiplier_family(MultiplierKind::Triangulars), 15), 1);
    add_y("naturals multiplier jacobi, y=1",
          multiplier_jacobi(multiplier_family(MultiplierKind::Naturals), 15), 1);
    return reg;
}

}  // namespace riocf
