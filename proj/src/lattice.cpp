#include "riocf/lattice.hpp"

#include "riocf/errors.hpp"

namespace riocf {

namespace {

struct Walker {
    const WeightScheme& w;
    YPoly total;

    // budget: remaining length units (a rise or fall costs 1, a horizontal 2
    // for Schroeder paths); allowed step set depends on the path kind
    void go(PathKind kind, unsigned budget, unsigned height, const YPoly& weight) {
        if (budget == 0) {
            if (height == 0) total = total + weight;
            return;
        }
        if (height > budget) return;  // cannot come back down in time
        go(kind, budget - 1, height + 1, weight * w.rise.at(height));
        if (height > 0) go(kind, budget - 1, height - 1, weight * w.fall.at(height));
        unsigned hcost = (kind == PathKind::Schroeder) ? 2 : 1;
        if (kind != PathKind::Dyck && budget >= hcost)
            go(kind, budget - hcost, height, weight * w.horizontal.at(height));
    }
};

}  // namespace

YPoly count_weighted_paths(PathKind kind, unsigned n, const WeightScheme& w) {
    if (n > 14)
        throw PreconditionError("TooLarge", "brute-force oracle is capped at n = 14");
    unsigned budget = (kind == PathKind::Motzkin) ? n : 2 * n;
    Walker walker{w, YPoly()};
    walker.go(kind, budget, 0, YPoly(1));
    return walker.total;
}

WeightScheme scheme_from_cf(const CFrac& c) {
    // deep enough for any level reachable within the n <= 14 guard
    const size_t depth = 15;
    WeightScheme s;
    switch (c.kind) {
        case CFKind::Stieltjes:
            for (size_t i = 0; i < depth; ++i) s.rise.prefix.push_back(c.alpha.at(i));
            break;
        case CFKind::Jacobi:
            for (size_t i = 0; i < depth; ++i) {
                s.horizontal.prefix.push_back(c.alpha.at(i));
                s.rise.prefix.push_back(c.beta.at(i));
            }
            break;
        case CFKind::Thron:
            for (size_t i = 0; i < depth; ++i) {
                s.horizontal.prefix.push_back(c.alpha.at(i));
                s.rise.prefix.push_back(c.beta.at(i));
            }
            break;
    }
    return s;
}

PathKind path_kind_for(CFKind kind) {
    switch (kind) {
        case CFKind::Stieltjes: return PathKind::Dyck;
        case CFKind::Jacobi: return PathKind::Motzkin;
        case CFKind::Thron: return PathKind::Schroeder;
    }
    throw PreconditionError("WrongKind", "unknown fraction kind");
}

}  // namespace riocf
