#include "xorclique/bounds.hpp"

#include <algorithm>

#include "xorclique/constructions.hpp"
#include "xorclique/errors.hpp"

namespace xorclique {

long long bound_l1(int k, long long N) { return 2 * k * (N / k - 1) + 1; }

long long bound_l2(int k, long long N) { return N * (N / k) / k; }

std::optional<long long> bound_f2N(long long N, long long ramsey_threshold) {
    if (N / 2 >= ramsey_threshold) return N / 2 + 4;
    return std::nullopt;
}

long long default_f2n_threshold() {
    return static_cast<long long>(ramsey_upper(7, 7));
}

BigInt binomial_big(const BigInt& n, const BigInt& r) {
    if (r < 0 || r > n) return 0;
    BigInt rr = std::min(r, BigInt(n - r));
    BigInt result = 1;
    for (BigInt i = 1; i <= rr; ++i) {
        result *= n - rr + i;
        result /= i;  // exact at every step: result = C(n-rr+i, i)
    }
    return result;
}

BigInt ramsey_upper(const BigInt& a, const BigInt& b) {
    return binomial_big(a + b - 2, a - 1);
}

const BigInt& RamseySequence::m_k() const {
    if (!complete) raise("TooLarge", "sequence for k = " + std::to_string(k) + " was cut off");
    return m.back();
}

std::optional<BigInt> RamseySequence::c() const {
    if (!m_final) return std::nullopt;
    return *m_final - 1;
}

namespace {

// r_{i+1} = C(m_i + 2k - 1, 2k) has about 2k times the bits of m_i.
constexpr unsigned long long kSequenceBitBudget = 1ull << 19;

} // namespace

RamseySequence theorem_constant(int k, long long materialize_limit) {
    RamseySequence seq;
    seq.k = k;
    seq.r.push_back(k + 1);
    seq.m.push_back(seq.r[0]);
    seq.complete = true;
    for (int i = 2; i <= k; ++i) {
        if ((boost::multiprecision::msb(seq.m.back()) + 1) *
                static_cast<unsigned long long>(2 * k + 1) > kSequenceBitBudget) {
            seq.complete = false;
            break;
        }
        seq.r.push_back(ramsey_upper(seq.m.back(), 2 * k + 1));
        seq.m.push_back(seq.r.back() * i);
    }
    if (seq.complete && seq.m_k() <= materialize_limit)
        seq.m_final = ramsey_upper(seq.m_k(), seq.m_k());
    return seq;
}

bool m_final_less(const RamseySequence& a, const RamseySequence& b) {
    if (a.m_final && b.m_final) return *a.m_final < *b.m_final;
    return a.m_k() < b.m_k();
}

const UpperEntry& BoundReport::min_upper() const {
    if (uppers.empty()) raise("BadInput", "report holds no upper bounds");
    const UpperEntry* best = &uppers[0];
    for (const UpperEntry& e : uppers)
        if (e.value < best->value) best = &e;
    return *best;
}

BoundReport report(int k, long long N, const ReportOptions& opts) {
    BoundReport rep;
    rep.k = k;
    rep.N = N;

    LowerBound lb = best_known_lower(k, N);
    rep.lower = lb.value;
    rep.lower_provenance = lb.witness ? lb.witness->provenance : "";
    if (opts.include_witness) rep.witness = std::move(lb.witness);

    rep.uppers.push_back({BigInt(bound_l1(k, N)), "star"});
    rep.uppers.push_back({BigInt(bound_l2(k, N)), "double_count"});
    if (k == 2) {
        if (auto v = bound_f2N(N, opts.ramsey_threshold))
            rep.uppers.push_back({BigInt(*v), "k2_large_n"});
    }
    if (auto c = theorem_constant(k).c())
        rep.uppers.push_back({BigInt(N / k) + *c, "ramsey_offset"});

    const BigInt& min_up = rep.min_upper().value;
    rep.consistent = BigInt(rep.lower) <= min_up;
    if (rep.consistent && BigInt(rep.lower) == min_up) rep.exact = rep.lower;
    return rep;
}

} // namespace xorclique
