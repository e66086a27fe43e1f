#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "xorclique/family.hpp"

namespace xorclique {

using BigInt = boost::multiprecision::cpp_int;

/// f(k,N) <= 2k(floor(N/k)-1)+1: around any member, at most k(floor(N/k)-1)
/// others meet it on each side.
long long bound_l1(int k, long long N);

/// f(k,N) <= floor(N*floor(N/k)/k) by counting point-member incidences.
long long bound_l2(int k, long long N);

/// floor(N/2)+4, valid once floor(N/2) >= ramsey_threshold where the
/// threshold is any sound stand-in for R(7,7). Absent below the threshold.
std::optional<long long> bound_f2N(long long N, long long ramsey_threshold);

/// ramsey_upper(7,7) = C(12,6) = 924, the default stand-in above.
long long default_f2n_threshold();

/// C(n, r) exactly; r is clamped to min(r, n-r) internally.
BigInt binomial_big(const BigInt& n, const BigInt& r);

/// R(a,b) <= C(a+b-2, a-1), the classical induction bound. Sound wherever
/// a true Ramsey number is called for.
BigInt ramsey_upper(const BigInt& a, const BigInt& b);

/// The recursive pair r_1 = k+1, r_i = ramsey_upper(m_{i-1}, 2k+1),
/// m_i = r_i * i, for i = 1..k, plus m_final = ramsey_upper(m_k, m_k).
///
/// Digit counts multiply by roughly 2k every step, so the sequence is cut
/// off (complete = false) once the next entry would blow past a fixed bit
/// budget, and m_final — whose digits scale with m_k itself — is
/// materialized only while m_k <= materialize_limit. m_final stays
/// comparable through m_k either way: it is strictly increasing in m_k.
struct RamseySequence {
    int k = 0;
    std::vector<BigInt> r;   // r[i-1] holds r_i
    std::vector<BigInt> m;   // m[i-1] holds m_i
    bool complete = false;   // r, m run all the way to i = k
    std::optional<BigInt> m_final;

    const BigInt& m_k() const;  // requires complete
    /// f(k,N) <= floor(N/k) + c with c = m_final - 1; absent when
    /// m_final is not materialized.
    std::optional<BigInt> c() const;
};

inline constexpr long long kDefaultMaterializeLimit = 10000;

RamseySequence theorem_constant(int k, long long materialize_limit = kDefaultMaterializeLimit);

/// Orders two complete sequences by their m_final values without
/// materializing them, via m_k monotonicity.
bool m_final_less(const RamseySequence& a, const RamseySequence& b);

struct UpperEntry {
    BigInt value;
    std::string rule;  // star | double_count | k2_large_n | ramsey_offset
};

struct BoundReport {
    int k = 0;
    long long N = 0;
    long long lower = 0;
    std::string lower_provenance;
    std::optional<SetFamily> witness;
    std::vector<UpperEntry> uppers;
    std::optional<long long> exact;
    bool consistent = true;  // lower <= min(uppers); false is a bug, not a result

    const UpperEntry& min_upper() const;
};

struct ReportOptions {
    long long ramsey_threshold = 924;
    bool include_witness = true;
};

/// Lower from the construction dispatcher, all applicable uppers, exact
/// when they meet.
BoundReport report(int k, long long N, const ReportOptions& opts = {});

} // namespace xorclique
