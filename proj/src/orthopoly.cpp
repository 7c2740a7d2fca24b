#include "riocf/orthopoly.hpp"

#include "riocf/errors.hpp"
#include "riocf/triangles.hpp"

namespace riocf {

RecurrenceSpec orthogonal_spec(Rational a, Rational b, Rational alpha, Rational beta) {
    RecurrenceSpec r;
    r.kind = RecurrenceKind::Orthogonal;
    r.a = std::move(a);
    r.b = std::move(b);
    r.alpha = std::move(alpha);
    r.beta = std::move(beta);
    return r;
}

RecurrenceSpec lbp_spec(Rational s, Rational t) {
    RecurrenceSpec r;
    r.kind = RecurrenceKind::LaurentBiorthogonal;
    r.s = std::move(s);
    r.t = std::move(t);
    return r;
}

RiordanPair coefficient_array(const RecurrenceSpec& r, size_t order) {
    if (r.kind == RecurrenceKind::Orthogonal) {
        std::vector<Rational> den{1, r.a, r.b};
        Series g = Series::rational({1, r.alpha, r.beta}, den, order);
        Series f = Series::rational({0, 1}, den, order);
        return riordan_new(g, f);
    }
    Series g = Series::rational({1, -(r.s + 1)}, {1, -r.s}, order);
    Series f = Series::rational({0, 1, -r.t}, {1, -r.s}, order);
    return riordan_new(g, f);
}

std::vector<std::vector<Rational>> recurrence_polynomials(const RecurrenceSpec& r,
                                                          size_t n) {
    // dense coefficient rows, low degree first
    std::vector<std::vector<Rational>> p;
    if (n == 0) return p;
    p.push_back({1});
    if (n == 1) return p;
    auto shift_mul = [](const std::vector<Rational>& q) {  // x * q
        std::vector<Rational> out(q.size() + 1);
        for (size_t i = 0; i < q.size(); ++i) out[i + 1] = q[i];
        return out;
    };
    auto axpy = [](std::vector<Rational> acc, const Rational& c,
                   const std::vector<Rational>& q) {
        if (acc.size() < q.size()) acc.resize(q.size());
        for (size_t i = 0; i < q.size(); ++i) acc[i] += c * q[i];
        return acc;
    };
    if (r.kind == RecurrenceKind::Orthogonal) {
        p.push_back({r.alpha - r.a, 1});
        for (size_t m = 2; m < n; ++m) {
            std::vector<Rational> q = shift_mul(p[m - 1]);
            q = axpy(std::move(q), -r.a, p[m - 1]);
            q = axpy(std::move(q), -r.b, p[m - 2]);
            if (m == 2) q[0] += r.beta;
            p.push_back(std::move(q));
        }
        return p;
    }
    p.push_back({-1, 1});
    for (size_t m = 2; m < n; ++m) {
        std::vector<Rational> q = shift_mul(p[m - 1]);
        q = axpy(std::move(q), r.s, p[m - 1]);
        q = axpy(std::move(q), -r.t, shift_mul(p[m - 2]));
        p.push_back(std::move(q));
    }
    return p;
}

std::vector<Rational> moments(const RecurrenceSpec& r, size_t n) {
    Triangle t = riordan_matrix(coefficient_array(r, n + 1), n);
    Triangle inv = triangle_inv(t);
    std::vector<Rational> out;
    for (size_t m = 0; m < n; ++m) out.push_back(inv.at(m, 0).constant_term());
    return out;
}

LbpMomentCfs lbp_moment_cfs(const Rational& s, const Rational& t,
                            bool allow_conjectural) {
    if (!(s == 1 && t == 3) && !allow_conjectural)
        throw PreconditionError("UnsupportedParameters",
                                "only (s,t) = (1,3) is asserted; pass the "
                                "conjectural flag to extrapolate the pattern");
    LbpMomentCfs out;
    out.thron = thron_cf(CoeffTrack{{YPoly(0)}, {YPoly(s)}},
                         CoeffTrack{{YPoly(1)}, {YPoly(t - s)}});
    out.stieltjes = stieltjes_cf(CoeffTrack{{YPoly(1)}, {YPoly(t), YPoly(t - s)}});
    out.jacobi = stieltjes_to_jacobi(out.stieltjes);
    return out;
}

}  // namespace riocf
