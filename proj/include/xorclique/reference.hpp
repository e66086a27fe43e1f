#pragma once

#include <vector>

#include "xorclique/bitset.hpp"
#include "xorclique/family.hpp"

namespace xorclique::reference {

/// Serial oracles kept deliberately naive and independent of the
/// production kernels; tests and benchmarks compare against them.

/// O(n^2 k) pair scan over sorted index vectors, no bit tricks.
VerificationReport verify_semiintersecting_naive(const SetFamily& fam);

/// Exactly-one-side rule for a single pair via plain set intersection.
bool xor_adjacent(const MemberSet& s, const MemberSet& t);

/// Adjacency of the product graph on pairs of k-subsets of {0..N-1},
/// vertex (g,h) = g*C(N,k)+h with subsets enumerated in colex order by a
/// next-combination walk. Built entry by entry from set arithmetic.
std::vector<Bitset> xor_adjacency_naive(int N, int k);

/// All k-subsets of {0..N-1} in colexicographic order.
std::vector<std::vector<int>> colex_subsets(int N, int k);

struct NaiveCliqueResult {
    int size = 0;
    std::vector<int> witness;
    unsigned long long nodes = 0;
};

/// Exhaustive branch enumeration with only the |R| + |P| <= best cut.
NaiveCliqueResult max_clique_naive(const std::vector<Bitset>& adj);

} // namespace xorclique::reference
