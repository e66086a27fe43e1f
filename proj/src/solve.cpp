#include "xorclique/solve.hpp"

#include <algorithm>
#include <limits>

#include "xorclique/errors.hpp"
#include "xorclique/graph.hpp"

namespace xorclique {

const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Exact: return "exact";
        case SolveStatus::LowerBoundOnly: return "lower-bound-only";
        case SolveStatus::BoundsOnly: return "bounds-only";
    }
    raise("BadInput", "unknown solve status");
}

namespace {

std::optional<long long> to_int64(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max()) return std::nullopt;
    return static_cast<long long>(v);
}

} // namespace

SolveOutcome solve_f(int k, long long N, const SolveOptions& opts) {
    ReportOptions ropts;
    ropts.ramsey_threshold = opts.ramsey_threshold;
    ropts.include_witness = true;

    SolveOutcome out;
    out.bounds = report(k, N, ropts);
    out.lower = out.bounds.lower;
    out.family = *out.bounds.witness;

    if (!out.bounds.uppers.empty()) {
        out.upper = to_int64(out.bounds.min_upper().value);
    }

    if (out.bounds.exact && !opts.force_solver) {
        out.status = SolveStatus::Exact;
        out.exact = *out.bounds.exact;
        return out;
    }

    // The Xor product has C(N,k)^2 vertices; past the cap only the
    // bracket is available.
    long long base = binom_capped(N, k, opts.vertex_cap);
    if (base > opts.vertex_cap || base * base > opts.vertex_cap ||
        N > std::numeric_limits<int>::max()) {
        out.status = SolveStatus::BoundsOnly;
        return out;
    }

    XorGraph g = build_xor_product(static_cast<int>(N), k, opts.vertex_cap);

    CliqueOptions copts;
    copts.time_limit_ms = opts.time_limit_ms;
    copts.thread_count = opts.thread_count;
    copts.seed_clique = family_to_clique(g, out.family);
    long long stop = g.vcount;
    if (out.upper) stop = std::min(stop, *out.upper);
    copts.stop_at = stop;

    CliqueResult res = max_clique(g, copts);
    out.clique = res;

    if (res.size > out.lower) {
        out.lower = res.size;
        out.family = clique_to_family(g, res.witness);
    }
    if (res.status == CliqueStatus::Exact) {
        out.status = SolveStatus::Exact;
        out.exact = out.lower;
    } else {
        out.status = SolveStatus::LowerBoundOnly;
    }
    return out;
}

} // namespace xorclique
