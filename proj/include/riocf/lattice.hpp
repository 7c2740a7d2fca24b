#pragma once

#include "riocf/cfrac.hpp"
#include "riocf/ypoly.hpp"

#include <vector>

namespace riocf {

// Per-level step weight: explicit prefix, weight 1 beyond it unless overridden.
struct WeightTrack {
    std::vector<YPoly> prefix;
    YPoly fallback = YPoly(1);

    YPoly at(size_t level) const {
        return level < prefix.size() ? prefix[level] : fallback;
    }
};

// rise/fall weights are indexed by the level the step starts at
struct WeightScheme {
    WeightTrack rise;
    WeightTrack fall;
    WeightTrack horizontal;
};

enum class PathKind { Dyck, Motzkin, Schroeder };

// Brute-force sum of weight products over all paths of the given size.
// Dyck/Schroeder size n = semi-length (path length 2n, horizontals count 2);
// Motzkin size n = number of steps. Deliberately unmemoized.
YPoly count_weighted_paths(PathKind kind, unsigned n, const WeightScheme& w);

// weight scheme realizing a CF's expansion coefficients as path counts,
// materialized far enough for the brute-force guard
WeightScheme scheme_from_cf(const CFrac& c);
PathKind path_kind_for(CFKind kind);

}  // namespace riocf
