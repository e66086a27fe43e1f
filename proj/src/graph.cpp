#include "xorclique/graph.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_set>

#include "xorclique/errors.hpp"

namespace xorclique {

long long binom_capped(long long n, long long r, long long cap) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 result = 1;
    for (long long i = 1; i <= r; ++i) {
        result = result * static_cast<unsigned long long>(n - r + i) /
                 static_cast<unsigned long long>(i);
        if (result > static_cast<unsigned __int128>(cap)) return cap + 1;
    }
    return static_cast<long long>(result);
}

long long binom(long long n, long long r) {
    return binom_capped(n, r, static_cast<long long>(1) << 62);
}

long long colex_rank(const std::vector<int>& sorted_set) {
    long long rank = 0;
    for (size_t i = 0; i < sorted_set.size(); ++i)
        rank += binom(sorted_set[i], static_cast<long long>(i) + 1);
    return rank;
}

std::vector<int> colex_unrank(long long rank, int k) {
    std::vector<int> out(k);
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (binom(c + 1, i) <= rank) ++c;
        out[i - 1] = c;
        rank -= binom(c, i);
    }
    return out;
}

KneserGraph build_kneser(int N, int k, long long vertex_cap) {
    if (k < 1 || k > N) raise("BadInput", "need 1 <= k <= N");
    long long V = binom_capped(N, k, vertex_cap);
    if (V > vertex_cap)
        raise("TooLarge", "C(" + std::to_string(N) + "," + std::to_string(k) + ") exceeds cap " +
                              std::to_string(vertex_cap));
    KneserGraph g;
    g.N = N;
    g.k = k;
    g.vcount = V;
    g.subsets.reserve(V);
    for (long long v = 0; v < V; ++v) {
        Bitset s(N);
        for (int e : colex_unrank(v, k)) s.set(e);
        g.subsets.push_back(std::move(s));
    }
    g.adj.assign(V, Bitset(V));
    for (long long v = 0; v < V; ++v)
        for (long long w = v + 1; w < V; ++w)
            if (!g.subsets[v].intersects(g.subsets[w])) {
                g.adj[v].set(w);
                g.adj[w].set(v);
                ++g.edges;
            }
    return g;
}

XorGraph build_xor_product(int N, int k, long long vertex_cap) {
    long long base = binom_capped(N, k, vertex_cap);
    if (base > vertex_cap || base * base > vertex_cap)
        raise("TooLarge", "C(" + std::to_string(N) + "," + std::to_string(k) + ")^2 exceeds cap " +
                              std::to_string(vertex_cap));
    KneserGraph kg = build_kneser(N, k, base);

    XorGraph g;
    g.N = N;
    g.k = k;
    g.base = base;
    g.vcount = base * base;
    g.adj.assign(g.vcount, Bitset(g.vcount));
    long long edges = 0;
#pragma omp parallel for schedule(static) reduction(+ : edges)
    for (long long v = 0; v < g.vcount; ++v) {
        const Bitset& arow = kg.adj[v / base];
        const Bitset& brow = kg.adj[v % base];
        for (long long w = 0; w < g.vcount; ++w) {
            if (arow.test(w / base) != brow.test(w % base)) {
                g.adj[v].set(w);
                ++edges;
            }
        }
    }
    g.edges = edges / 2;
    return g;
}

void export_dimacs(const std::vector<Bitset>& adj, std::ostream& out) {
    long long V = static_cast<long long>(adj.size());
    long long E = 0;
    for (long long v = 0; v < V; ++v)
        for (int w = adj[v].find_next(v + 1); w != -1; w = adj[v].find_next(w + 1)) ++E;
    out << "p edge " << V << ' ' << E << '\n';
    for (long long v = 0; v < V; ++v)
        for (int w = adj[v].find_next(v + 1); w != -1; w = adj[v].find_next(w + 1))
            out << "e " << v + 1 << ' ' << w + 1 << '\n';
}

bool is_clique(const XorGraph& g, const std::vector<long long>& vertices) {
    for (long long v : vertices)
        if (v < 0 || v >= g.vcount) raise("BadInput", "vertex " + std::to_string(v) + " out of range");
    std::unordered_set<long long> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) return false;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adj[vertices[i]].test(vertices[j])) return false;
    return true;
}

std::vector<long long> family_to_clique(const XorGraph& g, const SetFamily& fam) {
    if (fam.params.k != g.k || fam.params.N != g.N)
        raise("ParamMismatch", "family (" + std::to_string(fam.params.k) + "," +
                                   std::to_string(fam.params.N) + ") vs graph (" +
                                   std::to_string(g.k) + "," + std::to_string(g.N) + ")");
    std::vector<long long> out;
    out.reserve(fam.members.size());
    for (const MemberSet& m : fam.members)
        out.push_back(colex_rank(m.a.to_indices()) * g.base + colex_rank(m.b.to_indices()));
    return out;
}

SetFamily clique_to_family(const XorGraph& g, const std::vector<long long>& vertices,
                           bool check) {
    if (check && !is_clique(g, vertices))
        raise("NotAClique", "vertex set is not a clique");
    SetFamily fam;
    fam.params = {g.k, g.N};
    fam.provenance = "clique_witness(k=" + std::to_string(g.k) + ",N=" + std::to_string(g.N) + ")";
    for (long long v : vertices) {
        if (v < 0 || v >= g.vcount)
            raise("BadInput", "vertex " + std::to_string(v) + " out of range");
        MemberSet m{Bitset(g.N), Bitset(g.N)};
        for (int e : colex_unrank(v / g.base, g.k)) m.a.set(e);
        for (int e : colex_unrank(v % g.base, g.k)) m.b.set(e);
        fam.members.push_back(std::move(m));
    }
    return fam;
}

} // namespace xorclique
