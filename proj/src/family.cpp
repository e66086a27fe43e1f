#include "xorclique/family.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "xorclique/errors.hpp"

namespace xorclique {

const char* violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::SizeViolation: return "size-violation";
        case ViolationKind::BothSidesDisjoint: return "both-sides-disjoint";
        case ViolationKind::BothSidesIntersecting: return "both-sides-intersecting";
    }
    return "unknown";
}

VerificationReport verify_semiintersecting(const SetFamily& fam) {
    VerificationReport report;
    long long n = fam.size();
    int k = fam.params.k;

    for (long long i = 0; i < n; ++i) {
        const MemberSet& s = fam.members[i];
        if (s.a.count() != static_cast<size_t>(k) || s.b.count() != static_cast<size_t>(k))
            report.violations.push_back({i, -1, ViolationKind::SizeViolation});
    }

    std::vector<std::vector<Violation>> per_row(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < n; ++i) {
        const MemberSet& s = fam.members[i];
        for (long long j = i + 1; j < n; ++j) {
            const MemberSet& t = fam.members[j];
            bool in_a = s.a.intersects(t.a);
            bool in_b = s.b.intersects(t.b);
            if (in_a == in_b)
                per_row[i].push_back({i, j,
                                      in_a ? ViolationKind::BothSidesIntersecting
                                           : ViolationKind::BothSidesDisjoint});
        }
    }
    for (auto& row : per_row)
        report.violations.insert(report.violations.end(), row.begin(), row.end());

    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& x, const Violation& y) {
                  return std::tie(x.i, x.j) < std::tie(y.i, y.j);
              });
    report.valid = report.violations.empty();
    return report;
}

SetFamily trivial_construction(FamilyParams params) {
    long long k = params.k, N = params.N;
    SetFamily fam;
    fam.params = params;
    fam.provenance = "trivial(k=" + std::to_string(k) + ",N=" + std::to_string(N) + ")";
    long long count = N / k;
    for (long long i = 0; i < count; ++i) {
        MemberSet m{Bitset(N), Bitset(N)};
        for (long long s = 0; s < k; ++s) {
            m.a.set(s);
            m.b.set(i * k + s);
        }
        fam.members.push_back(std::move(m));
    }
    return fam;
}

SetFamily blow_up(const SetFamily& fam, const WeightFunction& g) {
    long long N = fam.params.N;
    if (static_cast<long long>(g.weights.size()) != 2 * N)
        raise("UnbalancedWeights", "weight vector has " + std::to_string(g.weights.size()) +
                                       " entries, universe has " + std::to_string(2 * N));
    for (int w : g.weights)
        if (w < 1) raise("UnbalancedWeights", "weights must be positive");

    // Block start offsets within the new halves, ascending point order.
    std::vector<long long> start_a(N), start_b(N);
    long long na = 0, nb = 0;
    for (long long c = 0; c < N; ++c) { start_a[c] = na; na += g.weights[c]; }
    for (long long r = 0; r < N; ++r) { start_b[r] = nb; nb += g.weights[N + r]; }
    if (na != nb)
        raise("UnbalancedWeights", "half sums differ: A " + std::to_string(na) + ", B " +
                                       std::to_string(nb));
    long long new_N = na;

    long long new_k = -1;
    for (const MemberSet& m : fam.members) {
        long long ka = 0, kb = 0;
        for (long long c : m.a.to_indices()) ka += g.weights[c];
        for (long long r : m.b.to_indices()) kb += g.weights[N + r];
        if (ka != kb)
            raise("UnbalancedWeights", "member sums differ: A " + std::to_string(ka) + ", B " +
                                           std::to_string(kb));
        if (new_k == -1) new_k = ka;
        if (ka != new_k)
            raise("UnbalancedWeights", "member sum " + std::to_string(ka) +
                                           " differs from first member's " + std::to_string(new_k));
    }
    if (new_k == -1) new_k = fam.params.k;  // empty family: keep k

    SetFamily out;
    out.params = {static_cast<int>(new_k), new_N};
    out.provenance = "blow_up(" + fam.provenance + ")";
    for (const MemberSet& m : fam.members) {
        MemberSet nm{Bitset(new_N), Bitset(new_N)};
        for (long long c : m.a.to_indices())
            for (int t = 0; t < g.weights[c]; ++t) nm.a.set(start_a[c] + t);
        for (long long r : m.b.to_indices())
            for (int t = 0; t < g.weights[N + r]; ++t) nm.b.set(start_b[r] + t);
        out.members.push_back(std::move(nm));
    }
    return out;
}

SetFamily embed(const SetFamily& fam, long long bigger_N) {
    long long N = fam.params.N;
    if (bigger_N < N)
        raise("ShrinkNotAllowed", "cannot embed N=" + std::to_string(N) + " into N=" +
                                      std::to_string(bigger_N));
    SetFamily out;
    out.params = {fam.params.k, bigger_N};
    out.provenance = bigger_N == N
                         ? fam.provenance
                         : "embed(" + fam.provenance + ",N=" + std::to_string(bigger_N) + ")";
    for (const MemberSet& m : fam.members) {
        MemberSet nm{Bitset(bigger_N), Bitset(bigger_N)};
        for (long long c : m.a.to_indices()) nm.a.set(c);
        for (long long r : m.b.to_indices()) nm.b.set(r);
        out.members.push_back(std::move(nm));
    }
    return out;
}

} // namespace xorclique
