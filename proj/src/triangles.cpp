#include "riocf/triangles.hpp"

#include "riocf/errors.hpp"

namespace riocf {

namespace {

Rational narayana_entry(size_t n, size_t k) {
    return Rational(binomial(n, k)) * Rational(binomial(n + 1, k)) / Rational(k + 1);
}

Triangle binomial_triangle(size_t n) {
    Triangle t;
    for (size_t r = 0; r < n; ++r) {
        std::vector<YPoly> row;
        for (size_t k = 0; k <= r; ++k) row.emplace_back(Rational(binomial(r, k)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Triangle narayana_triangle(size_t n) {
    Triangle t;
    for (size_t r = 0; r < n; ++r) {
        std::vector<YPoly> row;
        for (size_t k = 0; k <= r; ++k) row.emplace_back(narayana_entry(r, k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Triangle shifted_narayana_triangle(size_t n) {
    Triangle t;
    for (size_t r = 0; r < n; ++r) {
        std::vector<YPoly> row;
        for (size_t k = 0; k <= r; ++k) {
            if (k == 0)
                row.emplace_back(Rational(r == 0 ? 1 : 0));
            else
                row.emplace_back(narayana_entry(r - 1, k - 1));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace

Triangle identity_triangle(size_t n) {
    Triangle t;
    for (size_t r = 0; r < n; ++r) {
        std::vector<YPoly> row(r + 1, YPoly(0));
        row[r] = YPoly(1);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Triangle triangle_mul(const Triangle& t1, const Triangle& t2) {
    size_t n = std::min(t1.order(), t2.order());
    Triangle out;
    for (size_t r = 0; r < n; ++r) {
        std::vector<YPoly> row;
        for (size_t k = 0; k <= r; ++k) {
            YPoly e;
            for (size_t j = k; j <= r; ++j) e = e + t1.at(r, j) * t2.at(j, k);
            row.push_back(std::move(e));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

Triangle triangle_inv(const Triangle& t) {
    size_t n = t.order();
    std::vector<Rational> diag(n);
    for (size_t r = 0; r < n; ++r) {
        const YPoly& d = t.at(r, r);
        if (!d.is_constant() || d.is_zero())
            throw PreconditionError("SingularDiagonal",
                                    "diagonal entry is zero or carries y");
        diag[r] = d.constant_term();
    }
    Triangle out;
    for (size_t r = 0; r < n; ++r) out.rows.emplace_back(r + 1, YPoly(0));
    for (size_t r = 0; r < n; ++r) {
        out.rows[r][r] = YPoly(Rational(1) / diag[r]);
        for (size_t k = r; k-- > 0;) {
            YPoly acc;
            for (size_t j = k; j < r; ++j) acc = acc + t.at(r, j) * out.rows[j][k];
            out.rows[r][k] = acc.scaled(Rational(-1) / diag[r]);
        }
    }
    return out;
}

Triangle named_triangle(const std::string& name, size_t n) {
    if (n > 64) throw PreconditionError("TooLarge", "triangle order capped at 64");
    if (name == "binomial") return binomial_triangle(n);
    if (name == "narayana") return narayana_triangle(n);
    if (name == "narayana_shifted") return shifted_narayana_triangle(n);
    if (name == "nb_product")
        return triangle_mul(narayana_triangle(n), binomial_triangle(n));
    if (name == "nb_conjugate")
        return triangle_mul(triangle_inv(binomial_triangle(n)),
                            triangle_mul(narayana_triangle(n), binomial_triangle(n)));
    if (name == "delannoy_signed") {
        size_t ord = n + 1;
        Series g = Series::rational({1}, {1, 1}, ord);
        Series f = Series::rational({0, 1, -1}, {1, 1}, ord);
        return riordan_matrix(riordan_new(g, f), n);
    }
    if (name == "schroeder_peaks") {
        size_t ord = n + 2;
        Series g = Series::rational({1, -2}, {1, -1}, ord);
        return riordan_matrix(riordan_inv(riordan_new(g, g.shifted_up(1))), n);
    }
    throw PreconditionError("UnknownName", "no triangle named " + name);
}

NarayanaCfSuite narayana_cf_suite() {
    auto yc = [](int c0, int c1) {
        return YPoly::from_coeffs({Rational(c0), Rational(c1)});
    };
    NarayanaCfSuite s;
    s.jacobi = jacobi_cf(CoeffTrack::constant(yc(1, 1)), CoeffTrack::constant(YPoly::y()));
    s.thron = thron_cf(CoeffTrack{{YPoly(1)}, {yc(1, -1)}},
                       CoeffTrack::constant(YPoly::y()));
    // the displayed fraction's explicit levels, with the printed tail taken verbatim
    s.thron_rejected = thron_cf(CoeffTrack{{YPoly(1), yc(1, -1), yc(1, -1)}, {yc(-1, -1)}},
                                CoeffTrack::constant(YPoly::y()));
    s.shifted_thron = thron_cf(CoeffTrack{{YPoly(0)}, {yc(1, -1)}},
                               CoeffTrack::constant(YPoly::y()));
    s.little_q_stieltjes = stieltjes_cf(CoeffTrack{{}, {YPoly(1), yc(1, 1)}});
    s.little_q_thron = thron_cf(CoeffTrack{{YPoly(0)}, {YPoly::y()}},
                                CoeffTrack{{YPoly(1)}, {YPoly(1)}});
    s.little_q_jacobi = jacobi_cf(CoeffTrack{{YPoly(1)}, {yc(2, 1)}},
                                  CoeffTrack::constant(yc(1, 1)));
    s.nb_product_jacobi = jacobi_cf(CoeffTrack::constant(yc(2, 1)),
                                    CoeffTrack::constant(yc(1, 1)));
    s.nb_product_thron = thron_cf(CoeffTrack{{YPoly(1)}, {yc(0, -1)}},
                                  CoeffTrack::constant(yc(1, 1)));
    s.nb_conjugate_jacobi = jacobi_cf(CoeffTrack::constant(yc(1, 1)),
                                      CoeffTrack::constant(yc(1, 1)));
    s.alternating_thron = thron_cf(CoeffTrack::constant(YPoly(-1)),
                                   CoeffTrack{{}, {YPoly(2), YPoly(1)}});
    return s;
}

std::vector<Rational> binomial_transform(const std::vector<Rational>& seq,
                                         TransformDirection dir) {
    std::vector<Rational> out(seq.size());
    for (size_t n = 0; n < seq.size(); ++n) {
        Rational acc = 0;
        for (size_t k = 0; k <= n; ++k) {
            Rational term = Rational(binomial(n, k)) * seq[k];
            if (dir == TransformDirection::Inverse && (n - k) % 2 == 1) term = -term;
            acc += term;
        }
        out[n] = acc;
    }
    return out;
}

std::vector<Rational> large_schroeder_numbers(size_t n) {
    std::vector<Rational> out(n);
    for (size_t m = 0; m < n; ++m) {
        Rational acc = 0;
        for (size_t k = 0; k <= m; ++k)
            acc += Rational(binomial(m + k, 2 * k)) * Rational(binomial(2 * k, k)) /
                   Rational(k + 1);
        out[m] = acc;
    }
    return out;
}

std::vector<Rational> schroeder_alternating_transform(size_t n) {
    std::vector<Rational> s = large_schroeder_numbers(n + 2);
    std::vector<Rational> out(n);
    for (size_t m = 0; m < n; ++m) {
        Rational acc = 0;
        for (size_t k = 0; k <= m + 1; ++k) {
            Rational term = Rational(binomial(m + 1 + k, 2 * k)) * s[k];
            if ((m + 1 - k) % 2 == 1) term = -term;
            acc += term;
        }
        out[m] = acc;
    }
    return out;
}

}  // namespace riocf
