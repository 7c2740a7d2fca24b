#pragma once

#include "riocf/fps.hpp"

#include <vector>

namespace riocf {

// Lower-triangular number triangle; row n holds entries (n,0)..(n,n).
struct Triangle {
    std::vector<std::vector<YPoly>> rows;

    size_t order() const { return rows.size(); }
    const YPoly& at(size_t n, size_t k) const { return rows[n][k]; }
    bool rational_entries() const;
    bool operator==(const Triangle& o) const { return rows == o.rows; }
};

Triangle triangle_from_ints(const std::vector<std::vector<long long>>& rows);

// Ordinary Riordan pair (g, f): g(0) != 0, f(0) = 0, f'(0) != 0.
struct RiordanPair {
    Series g;
    Series f;
};

RiordanPair riordan_new(Series g, Series f);
Triangle riordan_matrix(const RiordanPair& r, size_t n);
RiordanPair riordan_mul(const RiordanPair& r1, const RiordanPair& r2);
RiordanPair riordan_inv(const RiordanPair& r);
Series ftra_apply(const RiordanPair& r, const Series& h);
Series bivariate_gf(const RiordanPair& r, size_t n);

struct BivariateSplit {
    Series g;
    Series f;
    bool is_riordan;         // g/(1 - y f) reproduced the input
    size_t verified_order;   // order at which the flag was decided
};

BivariateSplit riordan_from_bivariate(const Series& gf);

struct TriangleSums {
    std::vector<YPoly> row;
    std::vector<YPoly> diagonal;
    std::vector<YPoly> alternating;
};

TriangleSums triangle_sums(const Triangle& t);

bool is_involution(const RiordanPair& r, size_t n);

// G(x,y) of a triangle: x marks the row, y the column.
Series triangle_to_bivariate(const Triangle& t, size_t order);

}  // namespace riocf
