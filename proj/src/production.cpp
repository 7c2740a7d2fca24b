#include "riocf/production.hpp"

#include "riocf/errors.hpp"
#include "riocf/triangles.hpp"

namespace riocf {

ProductionMatrix production_matrix(const Triangle& t) {
    size_t n = t.order();
    if (n < 3)
        throw PreconditionError("InsufficientOrder",
                                "production matrix needs order >= 3");
    Triangle inv = triangle_inv(t);
    size_t m = n - 1;
    ProductionMatrix p;
    p.entries.assign(m, std::vector<YPoly>(m, YPoly(0)));
    for (size_t r = 0; r < m; ++r) {
        for (size_t k = 0; k < m; ++k) {
            YPoly acc;
            for (size_t j = 0; j <= r; ++j) {
                size_t src = j + 1;  // row of the top-trimmed matrix
                if (k > src) continue;
                acc = acc + inv.at(r, j) * t.at(src, k);
            }
            p.entries[r][k] = acc;
        }
    }
    return p;
}

bool is_tridiagonal(const ProductionMatrix& p) {
    for (size_t r = 0; r < p.size(); ++r)
        for (size_t k = 0; k < p.size(); ++k) {
            bool in_band = (k + 1 >= r) && (k <= r + 1);
            if (!in_band && !p.at(r, k).is_zero()) return false;
        }
    return true;
}

CFrac tridiagonal_to_jacobi(const ProductionMatrix& p) {
    if (!is_tridiagonal(p))
        throw PreconditionError("NotTridiagonal", "entries off the three bands");
    size_t m = p.size();
    for (size_t r = 0; r + 1 < m; ++r)
        if (p.at(r, r + 1) != YPoly(1))
            throw PreconditionError("BadSuperdiagonal", "superdiagonal must be 1");
    CoeffTrack a, b;
    for (size_t r = 0; r < m; ++r) a.prefix.push_back(p.at(r, r));
    for (size_t r = 0; r + 1 < m; ++r) b.prefix.push_back(p.at(r + 1, r));
    a.cycle = {m ? a.prefix.back() : YPoly(0)};
    b.cycle = {m > 1 ? b.prefix.back() : YPoly(0)};
    return jacobi_cf(std::move(a), std::move(b));
}

ExpProduction exp_production_za(const Series& g, const Series& f) {
    size_t n = std::min(g.order(), f.order());
    Series fbar = fps_reversion(f);
    Series gf = fps_compose(g, fbar.truncated(n - 1));
    Series z = fps_compose(fps_derivative(g), fbar.truncated(n - 1)) / gf;
    Series a = fps_compose(fps_derivative(f), fbar.truncated(n - 1));
    ExpProduction out{z, a, {}};
    if (n < 2) return out;
    size_t m = n - 2;
    out.p.entries.assign(m, std::vector<YPoly>(m, YPoly(0)));
    for (size_t r = 0; r < m; ++r) {
        for (size_t k = 0; k < m; ++k) {
            YPoly e;
            Rational rfac(factorial(static_cast<unsigned>(r)));
            if (k <= r)
                e = e + z.coeff(r - k).scaled(
                            rfac / Rational(factorial(static_cast<unsigned>(k))));
            if (k >= 1 && r + 1 >= k)
                e = e + a.coeff(r - k + 1).scaled(
                            rfac / Rational(factorial(static_cast<unsigned>(k - 1))));
            out.p.entries[r][k] = e;
        }
    }
    return out;
}

}  // namespace riocf
