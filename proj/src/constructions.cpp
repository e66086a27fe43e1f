#include "xorclique/constructions.hpp"

#include <numeric>
#include <string>

#include "xorclique/affine.hpp"
#include "xorclique/errors.hpp"
#include "xorclique/field.hpp"

namespace xorclique {

SetFamily affine_construction(int p) {
    Field f = field_new(p);
    auto classes = parallel_classes(f);
    long long N = static_cast<long long>(p) * p;

    SetFamily fam;
    fam.params = {p, N};
    fam.provenance = "affine(p=" + std::to_string(p) + ")";
    for (int i = 0; i < p; ++i) {
        for (const AffineLine& line : classes[i].lines) {
            MemberSet m{Bitset(N), Bitset(N)};
            for (int pt : line.points) m.a.set(pt);
            for (int t = 0; t < p; ++t) m.b.set(static_cast<long long>(i) * p + t);
            fam.members.push_back(std::move(m));
        }
    }
    return fam;
}

SetFamily stacked_affine(int p, int l) {
    Field f = field_new(p);
    if (l < 1 || l > p + 1)
        raise("TooManyCopies", std::to_string(l) + " copies, plane has only " +
                                   std::to_string(p + 1) + " parallel classes");
    auto classes = parallel_classes(f);
    long long p2 = static_cast<long long>(p) * p;
    long long N = l * p2;

    SetFamily fam;
    fam.params = {p, N};
    fam.provenance = "stacked_affine(p=" + std::to_string(p) + ",l=" + std::to_string(l) + ")";
    for (int copy = 0; copy < l; ++copy) {
        for (int cls = 0; cls < p; ++cls) {
            for (int off = 0; off < p; ++off) {
                MemberSet m{Bitset(N), Bitset(N)};
                for (int pt : classes[cls].lines[off].points) m.a.set(copy * p2 + pt);
                // B-block for class `cls` inside copy `copy`: line `cls`
                // of the B-plane's parallel class `copy`.
                for (int pt : classes[copy].lines[cls].points) m.b.set(pt);
                fam.members.push_back(std::move(m));
            }
        }
    }
    return fam;
}

SetFamily big_n_construction(int p, long long N) {
    long long p2 = static_cast<long long>(p) * p;
    long long p3 = p2 * p;
    if (N < p3)
        raise("NTooSmall", "N = " + std::to_string(N) + " is below p^3 = " + std::to_string(p3));

    SetFamily stacked = stacked_affine(p, p);  // occupies A-points [0, p^3), B-points [0, p^2)
    SetFamily fam = embed(stacked, N);
    fam.provenance = "big_n(p=" + std::to_string(p) + ",N=" + std::to_string(N) + ")";

    Field f = field_new(p);
    auto classes = parallel_classes(f);
    Bitset reserved_line(N);  // offset-0 line of the B-plane's vertical class
    for (int pt : classes[p].lines[0].points) reserved_line.set(pt);

    long long chunks = (N - p3) / p;
    for (long long c = 0; c < chunks; ++c) {
        MemberSet m{Bitset(N), reserved_line};
        for (int t = 0; t < p; ++t) m.a.set(p3 + c * p + t);
        fam.members.push_back(std::move(m));
    }
    return fam;
}

SetFamily weighted_pk_construction(int k, int p) {
    if (p > k)
        raise("PTooLarge", "p = " + std::to_string(p) + " exceeds k = " + std::to_string(k));
    SetFamily base = affine_construction(p);
    long long N = base.params.N;

    Field f = field_new(p);
    auto classes = parallel_classes(f);
    WeightFunction g;
    g.weights.assign(2 * N, 1);
    for (int pt : classes[p].lines[0].points) g.weights[pt] = k - p + 1;
    for (int i = 0; i < p; ++i) g.weights[N + static_cast<long long>(i) * p] = k - p + 1;

    SetFamily fam = blow_up(base, g);
    fam.provenance = "weighted(k=" + std::to_string(k) + ",p=" + std::to_string(p) + ")";
    return fam;
}

namespace {

constexpr long long kNoBranch = -1;

LowerBound lower_impl(int k, long long N, bool allow_divisor) {
    long long k2 = static_cast<long long>(k) * k;
    long long trivial_v = N / k;

    // Divisor lifts are depth 1: the shrunken instance is evaluated
    // without its own divisor branch. d = k only reproduces the trivial
    // value through a (1, N/k) family, so it is skipped.
    long long divisor_v = kNoBranch;
    int divisor_d = 0;
    if (allow_divisor) {
        long long g = std::gcd(static_cast<long long>(k), N);
        for (long long d = 2; d < k && d <= g; ++d) {
            if (g % d != 0) continue;
            LowerBound inner = lower_impl(static_cast<int>(k / d), N / d, false);
            if (inner.value > divisor_v) {
                divisor_v = inner.value;
                divisor_d = static_cast<int>(d);
            }
        }
    }

    bool k_is_pp = is_prime_power(k) && k <= kDefaultFieldCap;
    long long affine_v = (k_is_pp && N >= k2) ? k2 : kNoBranch;

    long long stacked_v = kNoBranch;
    int stacked_l = 0;
    if (k_is_pp && N >= k2) {
        stacked_l = static_cast<int>(std::min<long long>(k + 1, N / k2));
        stacked_v = stacked_l * k2;
    }

    long long bign_v = kNoBranch;
    if (k_is_pp && N >= k2 * k) bign_v = N / k - k2 + k2 * k;

    long long weighted_v = kNoBranch;
    int weighted_p = 0;
    for (int p = 2; p <= k && p <= kDefaultFieldCap; ++p) {
        if (!is_prime_power(p)) continue;
        if (static_cast<long long>(p) * k > N) continue;
        if (static_cast<long long>(p) * p >= weighted_v) {
            weighted_v = static_cast<long long>(p) * p;
            weighted_p = p;
        }
    }

    enum Branch { Trivial, Divisor, Affine, Stacked, BigN, Weighted };
    long long values[] = {trivial_v, divisor_v, affine_v, stacked_v, bign_v, weighted_v};
    int best = Trivial;
    for (int b = Trivial; b <= Weighted; ++b)
        if (values[b] != kNoBranch && values[b] >= values[best]) best = b;

    LowerBound out;
    out.value = values[best];
    switch (best) {
        case Trivial:
            out.witness = trivial_construction({k, N});
            break;
        case Divisor: {
            LowerBound inner = lower_impl(k / divisor_d, N / divisor_d, false);
            WeightFunction gw;
            gw.weights.assign(2 * (N / divisor_d), divisor_d);
            SetFamily lifted = blow_up(*inner.witness, gw);
            lifted.provenance = "divisor_lift(d=" + std::to_string(divisor_d) + "," +
                                inner.witness->provenance + ")";
            out.witness = std::move(lifted);
            break;
        }
        case Affine:
            out.witness = embed(affine_construction(k), N);
            break;
        case Stacked:
            out.witness = embed(stacked_affine(k, stacked_l), N);
            break;
        case BigN:
            out.witness = big_n_construction(k, N);
            break;
        case Weighted:
            out.witness = embed(weighted_pk_construction(k, weighted_p), N);
            break;
    }
    return out;
}

} // namespace

LowerBound best_known_lower(int k, long long N) { return lower_impl(k, N, true); }

} // namespace xorclique
