#pragma once

#include <string>
#include <vector>

#include "xorclique/bitset.hpp"

namespace xorclique {

struct FamilyParams {
    int k = 0;
    long long N = 0;
    bool operator==(const FamilyParams&) const = default;
};

/// One member S of a family over A = {0..N-1}, B = {N..2N-1}. Both halves
/// are stored as width-N bitsets; bit r of `b` stands for universe point
/// N + r, so growing N never needs bit shifts.
struct MemberSet {
    Bitset a;
    Bitset b;
    bool operator==(const MemberSet&) const = default;
};

struct SetFamily {
    FamilyParams params;
    std::string provenance;
    std::vector<MemberSet> members;

    long long size() const { return static_cast<long long>(members.size()); }
};

enum class ViolationKind {
    SizeViolation,         // |S_A| != k or |S_B| != k (j unused, -1)
    BothSidesDisjoint,     // S_A ∩ T_A = ∅ and S_B ∩ T_B = ∅
    BothSidesIntersecting, // S_A ∩ T_A ≠ ∅ and S_B ∩ T_B ≠ ∅ (duplicates land here)
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
    long long i = 0;
    long long j = -1;
    ViolationKind kind = ViolationKind::SizeViolation;
    bool operator==(const Violation&) const = default;
};

/// Violations sorted by (i, j): size checks first per member, then pair
/// checks. Identical across thread counts.
struct VerificationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Checks every member's part sizes and every unordered pair for the
/// exactly-one-side intersection rule. Pair scan parallelizes over rows.
VerificationReport verify_semiintersecting(const SetFamily& fam);

/// floor(N/k) members sharing a_part {0..k-1} with pairwise disjoint
/// consecutive b_parts.
SetFamily trivial_construction(FamilyParams params);

/// The function g: A ∪ B -> Z+, indexed by universe point 0..2N-1.
struct WeightFunction {
    std::vector<int> weights;
};

/// Replaces every universe point c by a block of g(c) fresh points, blocks
/// assigned in ascending point order. Requires uniform column sums N' on
/// both halves and uniform member sums k' on both parts of every member;
/// throws UnbalancedWeights otherwise. An empty family keeps k' = k.
SetFamily blow_up(const SetFamily& fam, const WeightFunction& g);

/// Reinterprets the family inside a larger universe: A-part indices are
/// unchanged, B-part points shift from N + r to bigger_N + r. Throws
/// ShrinkNotAllowed if bigger_N < N.
SetFamily embed(const SetFamily& fam, long long bigger_N);

} // namespace xorclique
