#pragma once

#include <iosfwd>
#include <vector>

#include "xorclique/bitset.hpp"
#include "xorclique/family.hpp"

namespace xorclique {

inline constexpr long long kDefaultVertexCap = 20000;

/// C(n, r) saturating at `cap` (returns cap + 1 once exceeded), so callers
/// can test limits without overflow.
long long binom_capped(long long n, long long r, long long cap);

/// Exact C(n, r) for values known to fit.
long long binom(long long n, long long r);

/// Position of a sorted k-subset in colexicographic order.
long long colex_rank(const std::vector<int>& sorted_set);

/// Inverse of colex_rank for subsets of any ground set.
std::vector<int> colex_unrank(long long rank, int k);

/// Graph on the C(N,k) k-subsets of {0..N-1} in colex order, edges between
/// disjoint subsets.
struct KneserGraph {
    int N = 0;
    int k = 0;
    long long vcount = 0;
    std::vector<Bitset> subsets;  // each of width N
    std::vector<Bitset> adj;
    long long edges = 0;
};

KneserGraph build_kneser(int N, int k, long long vertex_cap = kDefaultVertexCap);

/// Product graph on pairs (g,h) of k-subsets, vertex id g*C(N,k)+h, edges
/// where exactly one of the two coordinate pairs is disjoint. Cliques
/// correspond to semiintersecting families for (k, N).
struct XorGraph {
    int N = 0;
    int k = 0;
    long long base = 0;  // C(N,k)
    long long vcount = 0;
    std::vector<Bitset> adj;
    long long edges = 0;
};

XorGraph build_xor_product(int N, int k, long long vertex_cap = kDefaultVertexCap);

/// Plain-text undirected graph: "p edge V E" then 1-based "e u v" lines.
void export_dimacs(const std::vector<Bitset>& adj, std::ostream& out);

bool is_clique(const XorGraph& g, const std::vector<long long>& vertices);

/// Family members to vertex ids via colex ranks of both parts. Throws
/// ParamMismatch when family and graph parameters differ.
std::vector<long long> family_to_clique(const XorGraph& g, const SetFamily& fam);

/// Vertex ids back to a family. With check (default) a non-clique input
/// throws NotAClique; without, the mapping is applied regardless so the
/// caller can compare against its own verifier.
SetFamily clique_to_family(const XorGraph& g, const std::vector<long long>& vertices,
                           bool check = true);

} // namespace xorclique
