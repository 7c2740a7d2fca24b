#include "riocf/cfrac.hpp"

#include "riocf/errors.hpp"

namespace riocf {

YPoly CoeffTrack::at(size_t i) const {
    if (i < prefix.size()) return prefix[i];
    if (cycle.empty()) return YPoly();
    return cycle[(i - prefix.size()) % cycle.size()];
}

CFrac stieltjes_cf(CoeffTrack alpha) {
    return CFrac{CFKind::Stieltjes, std::move(alpha), CoeffTrack{}};
}

CFrac jacobi_cf(CoeffTrack alpha, CoeffTrack beta) {
    return CFrac{CFKind::Jacobi, std::move(alpha), std::move(beta)};
}

CFrac thron_cf(CoeffTrack alpha, CoeffTrack beta) {
    return CFrac{CFKind::Thron, std::move(alpha), std::move(beta)};
}

// Bottom-up evaluation at depth = order; level i multiplies by x at least once,
// so truncated levels cannot reach coefficients below x^order.
template <typename ToSeries>
static Series expand_impl(const CFrac& c, size_t order, ToSeries to_series) {
    if (order == 0) return Series(0);
    Series f = Series::constant(YPoly(1), order);
    Series one = Series::constant(YPoly(1), order);
    for (size_t level = order; level-- > 0;) {
        Series den = one;
        switch (c.kind) {
            case CFKind::Stieltjes:
                den = den - (to_series(c.alpha.at(level)) * f).shifted_up(1);
                break;
            case CFKind::Jacobi:
                den = den - to_series(c.alpha.at(level)).shifted_up(1) -
                      (to_series(c.beta.at(level)) * f).shifted_up(2);
                break;
            case CFKind::Thron:
                den = den - to_series(c.alpha.at(level)).shifted_up(1) -
                      (to_series(c.beta.at(level)) * f).shifted_up(1);
                break;
        }
        f = one / den;
    }
    return f;
}

Series cf_expand(const CFrac& c, size_t order) {
    return expand_impl(
        c, order, [order](const YPoly& p) { return Series::constant(p, order); });
}

Series cf_expand_y_as_x(const CFrac& c, size_t order) {
    return expand_impl(c, order, [order](const YPoly& p) {
        Series s(order);
        const auto& cs = p.coeffs();
        for (size_t j = 0; j < cs.size() && j < order; ++j) s.coeff(j) = YPoly(cs[j]);
        return s;
    });
}

CFrac stieltjes_to_jacobi(const CFrac& c) {
    if (c.kind != CFKind::Stieltjes)
        throw PreconditionError("WrongKind", "contraction needs a Stieltjes fraction");
    const CoeffTrack& s = c.alpha;
    size_t p = s.prefix.size();
    size_t l = s.cycle.empty() ? 1 : s.cycle.size();
    size_t period = (l % 2 == 1) ? l : l / 2;
    auto a_at = [&](size_t i) {
        return i == 0 ? s.at(0) : s.at(2 * i - 1) + s.at(2 * i);
    };
    auto b_at = [&](size_t j) { return s.at(2 * j) * s.at(2 * j + 1); };

    CoeffTrack a, b;
    size_t ap = (p + 2) / 2;  // first index whose window lies in the cyclic tail
    for (size_t i = 0; i < ap; ++i) a.prefix.push_back(a_at(i));
    for (size_t j = 0; j < period; ++j) a.cycle.push_back(a_at(ap + j));
    size_t bp = (p + 1) / 2;
    for (size_t j = 0; j < bp; ++j) b.prefix.push_back(b_at(j));
    for (size_t j = 0; j < period; ++j) b.cycle.push_back(b_at(bp + j));
    return jacobi_cf(std::move(a), std::move(b));
}

CFrac cf_substitute_y(const CFrac& c, const Rational& v) {
    auto sub = [&](const CoeffTrack& t) {
        CoeffTrack out;
        for (const YPoly& p : t.prefix) out.prefix.push_back(YPoly(p.eval(v)));
        for (const YPoly& p : t.cycle) out.cycle.push_back(YPoly(p.eval(v)));
        return out;
    };
    return CFrac{c.kind, sub(c.alpha), sub(c.beta)};
}

CFrac thron_to_jacobi_level0(const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d, const Rational& u, const Rational& v) {
    YPoly y = YPoly::y();
    CoeffTrack ja{{YPoly(b + d) + y.scaled(a + c)}, {YPoly(u + 2 * v)}};
    CoeffTrack jb{{(YPoly(d) + y.scaled(c)).scaled(u + v)}, {YPoly(v * (u + v))}};
    return jacobi_cf(std::move(ja), std::move(jb));
}

RiordanPair jfrac_level0_to_riordan(const YPoly& a0, const YPoly& b0, const Rational& u,
                                    const Rational& v, size_t order) {
    CFrac c = jacobi_cf(CoeffTrack{{a0}, {YPoly(u)}}, CoeffTrack{{b0}, {YPoly(v)}});
    BivariateSplit split = riordan_from_bivariate(cf_expand(c, order));
    if (!split.is_riordan)
        throw VerificationError("NotRiordan",
                                "fraction did not split as g/(1 - y f)");
    return riordan_new(std::move(split.g), std::move(split.f));
}

CFrac predicted_inverse_jfrac(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d) {
    YPoly y = YPoly::y();
    CoeffTrack ja{{y - YPoly(a)}, {YPoly(c - a - 2)}};
    CoeffTrack jb{{YPoly(a - b) - y}, {YPoly(1 + a - b - c + d)}};
    return jacobi_cf(std::move(ja), std::move(jb));
}

CFrac rational_riordan_inverse_jfrac(const Rational& a, const Rational& b,
                                     const Rational& c) {
    YPoly y = YPoly::y();
    CoeffTrack ja{{y + YPoly(a - c)}, {YPoly(a)}};
    CoeffTrack jb{{YPoly(b) + y.scaled(c)}, {YPoly(b)}};
    return jacobi_cf(std::move(ja), std::move(jb));
}

std::pair<RiordanPair, CFrac> involution_gf(const Rational& a, const Rational& b,
                                            size_t order) {
    YPoly y = YPoly::y();
    CFrac c = jacobi_cf(CoeffTrack{{YPoly(2 * a - 2) - y}, {YPoly(a)}},
                        CoeffTrack{{YPoly(a - 1) - y}, {YPoly(b)}});
    BivariateSplit split = riordan_from_bivariate(cf_expand(c, order));
    if (!split.is_riordan)
        throw VerificationError("NotRiordan",
                                "fraction did not split as g/(1 - y f)");
    return {riordan_new(std::move(split.g), std::move(split.f)), std::move(c)};
}

}  // namespace riocf
