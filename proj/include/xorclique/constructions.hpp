#pragma once

#include <optional>

#include "xorclique/family.hpp"

namespace xorclique {

/// Size p^2 family for (p, p^2): members pair the lines of slope class i
/// with B-block i, for i = 1..p. The vertical class stays unused so every
/// member's A-line crosses it; the weighted construction relies on that.
SetFamily affine_construction(int p);

/// Size l*p^2 family for (p, l*p^2), 1 <= l <= p+1: l point planes on A,
/// one plane on the first p^2 points of B. Copy i runs the affine
/// construction on A-plane i with its B-blocks taken as the lines of
/// parallel class i of the B-plane.
SetFamily stacked_affine(int p, int l);

/// Size floor(N/p) - p^2 + p^3 family for (p, N), N >= p^3: the stacked
/// family with l = p on the first p^3 A-points, plus floor((N-p^3)/p)
/// disjoint p-chunks of the remaining A-points, all paired with the
/// offset-0 line of the B-plane's reserved vertical class.
SetFamily big_n_construction(int p, long long N);

/// Size p^2 family for (k, pk), p <= k: blow-up of the affine family with
/// weight k-p+1 on the offset-0 vertical A-line and on the smallest point
/// of each B-block, weight 1 elsewhere.
SetFamily weighted_pk_construction(int k, int p);

struct LowerBound {
    long long value = 0;
    std::optional<SetFamily> witness;
};

/// Best construction size over: trivial, depth-1 divisor lifts, affine,
/// stacked, big-N, and weighted, each embedded into N where needed. Ties
/// go to the later branch in that order, so a weighted witness wins when
/// it matches. The witness always achieves `value`.
LowerBound best_known_lower(int k, long long N);

} // namespace xorclique
