#pragma once

#include "riocf/cfrac.hpp"
#include "riocf/riordan.hpp"

#include <vector>

namespace riocf {

// Square matrix T^{-1}*(T with its top row removed); entries trusted for
// row and column index < input order - 1.
struct ProductionMatrix {
    std::vector<std::vector<YPoly>> entries;

    size_t size() const { return entries.size(); }
    const YPoly& at(size_t n, size_t k) const { return entries[n][k]; }
    bool operator==(const ProductionMatrix& o) const { return entries == o.entries; }
};

ProductionMatrix production_matrix(const Triangle& t);

bool is_tridiagonal(const ProductionMatrix& p);

// tridiagonal with unit superdiagonal -> Jacobi CF of the first-column GF
CFrac tridiagonal_to_jacobi(const ProductionMatrix& p);

struct ExpProduction {
    Series z;
    Series a;
    ProductionMatrix p;
};

// Z = g'(fbar)/g(fbar), A = f'(fbar); P assembled from
// p_{n,k} = (n!/k!)[x^{n-k}]Z + (n!/(k-1)!)[x^{n-k+1}]A
ExpProduction exp_production_za(const Series& g, const Series& f);

}  // namespace riocf
