#include "xorclique/reference.hpp"

#include <algorithm>

namespace xorclique::reference {

namespace {

bool sorted_intersects(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

} // namespace

VerificationReport verify_semiintersecting_naive(const SetFamily& fam) {
    VerificationReport report;
    int k = fam.params.k;
    long long n = fam.size();

    std::vector<std::vector<int>> as(n), bs(n);
    for (long long i = 0; i < n; ++i) {
        as[i] = fam.members[i].a.to_indices();
        bs[i] = fam.members[i].b.to_indices();
        if (static_cast<int>(as[i].size()) != k || static_cast<int>(bs[i].size()) != k)
            report.violations.push_back({i, -1, ViolationKind::SizeViolation});
    }
    for (long long i = 0; i < n; ++i)
        for (long long j = i + 1; j < n; ++j) {
            bool in_a = sorted_intersects(as[i], as[j]);
            bool in_b = sorted_intersects(bs[i], bs[j]);
            if (in_a == in_b)
                report.violations.push_back({i, j,
                                             in_a ? ViolationKind::BothSidesIntersecting
                                                  : ViolationKind::BothSidesDisjoint});
        }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& x, const Violation& y) {
                  return std::tie(x.i, x.j) < std::tie(y.i, y.j);
              });
    report.valid = report.violations.empty();
    return report;
}

bool xor_adjacent(const MemberSet& s, const MemberSet& t) {
    bool in_a = sorted_intersects(s.a.to_indices(), t.a.to_indices());
    bool in_b = sorted_intersects(s.b.to_indices(), t.b.to_indices());
    return in_a != in_b;
}

std::vector<std::vector<int>> colex_subsets(int N, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        // Next subset in colex order: bump the lowest position that can
        // grow without touching the one above it, reset those below.
        int i = 0;
        while (i < k) {
            int limit = (i + 1 < k) ? cur[i + 1] : N;
            if (cur[i] + 1 < limit) break;
            ++i;
        }
        if (i == k) return out;
        ++cur[i];
        for (int j = 0; j < i; ++j) cur[j] = j;
    }
}

std::vector<Bitset> xor_adjacency_naive(int N, int k) {
    auto subsets = colex_subsets(N, k);
    size_t base = subsets.size();
    size_t V = base * base;
    std::vector<Bitset> adj(V, Bitset(V));
    for (size_t v = 0; v < V; ++v) {
        const auto& ga = subsets[v / base];
        const auto& ha = subsets[v % base];
        for (size_t w = v + 1; w < V; ++w) {
            bool a_dis = !sorted_intersects(ga, subsets[w / base]);
            bool b_dis = !sorted_intersects(ha, subsets[w % base]);
            if (a_dis != b_dis) {
                adj[v].set(w);
                adj[w].set(v);
            }
        }
    }
    return adj;
}

namespace {

void extend_naive(const std::vector<Bitset>& adj, Bitset P, std::vector<int>& R,
                  NaiveCliqueResult& best) {
    ++best.nodes;
    if (static_cast<int>(R.size()) > best.size) {
        best.size = static_cast<int>(R.size());
        best.witness = R;
    }
    if (R.size() + P.count() <= static_cast<size_t>(best.size)) return;
    for (int v = P.find_next(0); v != -1; v = P.find_next(v + 1)) {
        P.reset(v);
        if (R.size() + 1 + P.count() <= static_cast<size_t>(best.size)) return;
        R.push_back(v);
        extend_naive(adj, Bitset::intersection(P, adj[v]), R, best);
        R.pop_back();
    }
}

} // namespace

NaiveCliqueResult max_clique_naive(const std::vector<Bitset>& adj) {
    NaiveCliqueResult best;
    Bitset P(adj.size());
    for (size_t v = 0; v < adj.size(); ++v) P.set(v);
    std::vector<int> R;
    extend_naive(adj, P, R, best);
    return best;
}

} // namespace xorclique::reference
