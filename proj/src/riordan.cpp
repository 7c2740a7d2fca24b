#include "riocf/riordan.hpp"

#include "riocf/errors.hpp"

namespace riocf {

bool Triangle::rational_entries() const {
    for (const auto& row : rows)
        for (const auto& e : row)
            if (!e.is_constant()) return false;
    return true;
}

Triangle triangle_from_ints(const std::vector<std::vector<long long>>& rows) {
    Triangle t;
    for (size_t n = 0; n < rows.size(); ++n) {
        std::vector<YPoly> row;
        for (auto v : rows[n]) row.push_back(YPoly(Rational(v)));
        row.resize(n + 1);
        t.rows.push_back(std::move(row));
    }
    return t;
}

RiordanPair riordan_new(Series g, Series f) {
    if (g.order() == 0 || g.coeff(0).is_zero())
        throw PreconditionError("InvalidG", "g must have nonzero constant term");
    if (f.order() < 2 || !f.coeff(0).is_zero() || f.coeff(1).is_zero())
        throw PreconditionError("InvalidF", "f must vanish at 0 with nonzero linear term");
    return RiordanPair{std::move(g), std::move(f)};
}

Triangle riordan_matrix(const RiordanPair& r, size_t n) {
    if (r.g.order() < n || r.f.order() < n)
        throw PreconditionError("InsufficientOrder",
                                "pair carries fewer than the requested coefficients");
    Triangle t;
    t.rows.resize(n);
    for (size_t row = 0; row < n; ++row) t.rows[row].resize(row + 1);
    Series col = r.g.truncated(n);
    Series f = r.f.truncated(n);
    for (size_t k = 0; k < n; ++k) {
        for (size_t row = k; row < n; ++row) t.rows[row][k] = col.coeff(row);
        if (k + 1 < n) col = col * f;
    }
    return t;
}

RiordanPair riordan_mul(const RiordanPair& r1, const RiordanPair& r2) {
    return riordan_new(r1.g * fps_compose(r2.g, r1.f), fps_compose(r2.f, r1.f));
}

RiordanPair riordan_inv(const RiordanPair& r) {
    Series fbar = fps_reversion(r.f);
    Series one = Series::constant(YPoly(1), fbar.order());
    return riordan_new(one / fps_compose(r.g, fbar), fbar);
}

Series ftra_apply(const RiordanPair& r, const Series& h) {
    return r.g * fps_compose(h, r.f);
}

Series bivariate_gf(const RiordanPair& r, size_t n) {
    Series den = -(r.f.truncated(n) * YPoly::y());
    den = den.padded(n);
    den.coeff(0) = den.coeff(0) + YPoly(1);
    return r.g.truncated(n) / den;
}

BivariateSplit riordan_from_bivariate(const Series& gf) {
    size_t n = gf.order();
    if (n == 0 || gf.coeff(0).eval(0) == 0)
        throw PreconditionError("ZeroConstant", "need G(0,0) != 0");
    Series g = ypoly_substitute(gf, 0);
    Series g1 = ypoly_substitute(gf, 1);
    Series one = Series::constant(YPoly(1), n);
    Series f = one - g / g1;
    Series den = one - f * YPoly::y();
    bool ok = series_eq(g / den, gf, n);
    return BivariateSplit{std::move(g), std::move(f), ok, n};
}

TriangleSums triangle_sums(const Triangle& t) {
    TriangleSums s;
    size_t n = t.order();
    s.row.resize(n);
    s.diagonal.resize(n);
    s.alternating.resize(n);
    for (size_t row = 0; row < n; ++row) {
        for (size_t k = 0; k <= row; ++k) {
            s.row[row] = s.row[row] + t.at(row, k);
            if (k % 2 == 0)
                s.alternating[row] = s.alternating[row] + t.at(row, k);
            else
                s.alternating[row] = s.alternating[row] - t.at(row, k);
            if (row + k < n) s.diagonal[row + k] = s.diagonal[row + k] + t.at(row, k);
        }
    }
    return s;
}

bool is_involution(const RiordanPair& r, size_t n) {
    Triangle sq = riordan_matrix(riordan_mul(r, r), n);
    for (size_t row = 0; row < n; ++row)
        for (size_t k = 0; k <= row; ++k)
            if (sq.at(row, k) != (row == k ? YPoly(1) : YPoly()))
                return false;
    return true;
}

Series triangle_to_bivariate(const Triangle& t, size_t order) {
    Series out(order);
    for (size_t n = 0; n < t.order() && n < order; ++n) {
        std::vector<Rational> acc(n + 1);
        for (size_t k = 0; k <= n; ++k) {
            const YPoly& e = t.at(n, k);
            if (!e.is_constant())
                throw PreconditionError("NonRationalEntries",
                                        "bivariate view needs rational entries");
            acc[k] = e.constant_term();
        }
        out.coeff(n) = YPoly::from_coeffs(acc);
    }
    return out;
}

}  // namespace riocf
