#pragma once

#include <optional>

#include "xorclique/bounds.hpp"
#include "xorclique/clique.hpp"
#include "xorclique/family.hpp"

namespace xorclique {

enum class SolveStatus {
    Exact,           // value certified by matching bounds or exhausted search
    LowerBoundOnly,  // search timed out; best incumbent reported
    BoundsOnly,      // instance beyond the vertex cap; bracket reported
};

const char* solve_status_name(SolveStatus s);

struct SolveOptions {
    double time_limit_ms = 0;
    int thread_count = 1;
    long long vertex_cap = kDefaultVertexCap;
    long long ramsey_threshold = 924;
    /// Run the search even when the bounds already meet (they are then
    /// used as the stopping certificate).
    bool force_solver = false;
};

struct SolveOutcome {
    BoundReport bounds;
    std::optional<CliqueResult> clique;  // present when the search ran
    SolveStatus status = SolveStatus::BoundsOnly;
    long long lower = 0;                 // best certified lower bound
    std::optional<long long> upper;      // min upper when it fits 64 bits
    std::optional<long long> exact;
    SetFamily family;                    // family achieving `lower`
};

/// Brackets f(k,N): construction lower + formula uppers, then an exact
/// search when the instance fits under the vertex cap, seeded with the
/// construction witness and stopped early at the proven upper bound.
SolveOutcome solve_f(int k, long long N, const SolveOptions& opts = {});

} // namespace xorclique
