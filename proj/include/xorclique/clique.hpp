#pragma once

#include <vector>

#include "xorclique/bitset.hpp"
#include "xorclique/graph.hpp"

namespace xorclique {

struct CliqueOptions {
    double time_limit_ms = 0;  // 0 = no limit
    int thread_count = 1;
    /// Starting incumbent; must itself be a clique of the graph.
    std::vector<long long> seed_clique;
    /// Externally proven upper bound on the clique number; once the
    /// incumbent reaches it the search stops and the result is still
    /// exact. -1 = none.
    long long stop_at = -1;
};

enum class CliqueStatus {
    Exact,           // size is the clique number
    LowerBoundOnly,  // hit the time limit; size is the best incumbent
};

struct CliqueResult {
    int size = 0;
    std::vector<long long> witness;
    CliqueStatus status = CliqueStatus::Exact;
    unsigned long long nodes = 0;  // branch evaluations
    double ms = 0;
};

/// Branch and bound with greedy coloring bounds on a degeneracy-ordered
/// graph. Root branches split across threads when thread_count > 1; the
/// returned size is schedule independent, and single-threaded runs are
/// bit-identical. Witnesses are re-verified before return, always.
CliqueResult max_clique(const std::vector<Bitset>& adj, const CliqueOptions& opts = {});
CliqueResult max_clique(const XorGraph& g, const CliqueOptions& opts = {});

} // namespace xorclique
