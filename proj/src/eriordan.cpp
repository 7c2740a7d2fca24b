#include "riocf/eriordan.hpp"

#include "riocf/errors.hpp"

namespace riocf {

Series fps_exp(const Series& h) {
    size_t n = h.order();
    if (n == 0) return Series(0);
    if (!h.coeff(0).is_zero())
        throw PreconditionError("NonzeroConstant", "exp needs zero constant term");
    // E' = h' E, solved coefficientwise: m e_m = sum_{k=1}^m k h_k e_{m-k}
    Series e(n);
    e.coeff(0) = YPoly(1);
    for (size_t m = 1; m < n; ++m) {
        YPoly acc;
        for (size_t k = 1; k <= m; ++k)
            acc = acc + h.coeff(k).scaled(Rational(k)) * e.coeff(m - k);
        e.coeff(m) = acc.scaled(Rational(1) / Rational(m));
    }
    return e;
}

ExpRiordanPair eriordan_new(Series g, Series f) {
    RiordanPair checked = riordan_new(std::move(g), std::move(f));
    return ExpRiordanPair{std::move(checked.g), std::move(checked.f)};
}

Triangle eriordan_matrix(const ExpRiordanPair& e, size_t n) {
    if (e.g.order() < n || e.f.order() < n)
        throw PreconditionError("InsufficientOrder",
                                "series order too small for requested triangle");
    Triangle t;
    for (size_t r = 0; r < n; ++r) t.rows.emplace_back(r + 1, YPoly(0));
    Series col = e.g;
    for (size_t k = 0; k < n; ++k) {
        Rational kfac(factorial(static_cast<unsigned>(k)));
        for (size_t r = k; r < n; ++r)
            t.rows[r][k] =
                col.coeff(r).scaled(Rational(factorial(static_cast<unsigned>(r))) / kfac);
        if (k + 1 < n) col = col * e.f;
    }
    return t;
}

Series eriordan_bivariate_egf(const ExpRiordanPair& e, size_t n) {
    Series prod = e.g * fps_exp(e.f * YPoly::y());
    return prod.truncated(std::min(n, prod.order()));
}

CFrac multiplier_jacobi(const MultiplierFamily& m, size_t depth) {
    auto mult_at = [&](size_t n) -> Rational {  // n >= 1
        switch (m.mults) {
            case MultiplierKind::Squares: return Rational(n) * Rational(n);
            case MultiplierKind::Triangulars:
                return Rational(n) * Rational(n + 1) / Rational(2);
            case MultiplierKind::Naturals: return Rational(n);
            case MultiplierKind::Explicit:
                if (n - 1 >= m.explicit_mults.size())
                    throw PreconditionError("InsufficientOrder",
                                            "explicit multiplier list too short");
                return m.explicit_mults[n - 1];
        }
        return Rational(0);
    };
    CoeffTrack a, b;
    for (size_t i = 0; i < depth; ++i) {
        a.prefix.push_back(m.a0 + YPoly(m.a_step * Rational(i)));
        b.prefix.push_back(YPoly(m.b_base * mult_at(i + 1)));
    }
    // placeholder tails; only the materialized prefix is meaningful
    a.cycle = {a.prefix.empty() ? YPoly(0) : a.prefix.back()};
    b.cycle = {b.prefix.empty() ? YPoly(0) : b.prefix.back()};
    return jacobi_cf(std::move(a), std::move(b));
}

}  // namespace riocf
