#include "xorclique/clique.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>

#include "xorclique/errors.hpp"

namespace xorclique {

namespace {

using Clock = std::chrono::steady_clock;

/// Elimination order by repeated minimum degree, ties to the smallest
/// vertex index.
std::vector<int> degeneracy_order(const std::vector<Bitset>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> degree(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].count());
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || degree[v] < degree[best])) best = v;
        removed[best] = true;
        order.push_back(best);
        for (int w = adj[best].find_next(0); w != -1; w = adj[best].find_next(w + 1))
            if (!removed[w]) --degree[w];
    }
    return order;
}

struct Searcher {
    const std::vector<Bitset>& adj;  // renumbered
    std::atomic<int>& best;
    std::vector<int>& best_stack;  // renumbered witness, guarded by crit section
    std::atomic<bool>& stop;       // set on timeout or on reaching stop_at
    std::atomic<bool>& timed_out;
    long long stop_at;
    Clock::time_point deadline;
    bool has_deadline;
    unsigned long long nodes = 0;
    std::vector<int> stack;

    bool should_stop() {
        if (stop.load(std::memory_order_relaxed)) return true;
        if (has_deadline && (nodes & 255) == 0 && Clock::now() >= deadline) {
            timed_out.store(true, std::memory_order_relaxed);
            stop.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    void report(int size) {
        int cur = best.load(std::memory_order_relaxed);
        while (size > cur && !best.compare_exchange_weak(cur, size)) {
        }
        if (size > cur) {
#pragma omp critical(xorclique_incumbent)
            {
                // Re-check: another thread may have published a larger one
                // between the exchange and here.
                if (static_cast<int>(stack.size()) >= static_cast<int>(best_stack.size()) &&
                    static_cast<int>(stack.size()) == size)
                    best_stack = stack;
            }
            if (stop_at >= 0 && size >= stop_at) stop.store(true, std::memory_order_relaxed);
        }
    }

    /// Greedy coloring by independent-set peeling in index order; fills
    /// `order` with P's vertices, colors ascending, and `bound[i]` = color
    /// of order[i].
    void color_sort(const Bitset& P, std::vector<int>& order, std::vector<int>& bound) {
        order.clear();
        bound.clear();
        Bitset uncolored = P;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset candidates = uncolored;
            for (int v = candidates.find_next(0); v != -1; v = candidates.find_next(v + 1)) {
                order.push_back(v);
                bound.push_back(color);
                uncolored.reset(v);
                candidates.reset(v);
                candidates.andnot_with(adj[v]);
            }
        }
    }

    void expand(const Bitset& P_in, int depth) {
        ++nodes;
        if (should_stop()) return;
        std::vector<int> order, bound;
        color_sort(P_in, order, bound);
        Bitset P = P_in;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (depth + bound[i] <= best.load(std::memory_order_relaxed)) return;
            if (should_stop()) return;
            int v = order[i];
            stack.push_back(v);
            if (depth + 1 > best.load(std::memory_order_relaxed)) report(depth + 1);
            Bitset next = Bitset::intersection(P, adj[v]);
            if (next.any()) expand(next, depth + 1);
            stack.pop_back();
            P.reset(v);
        }
    }
};

} // namespace

CliqueResult max_clique(const std::vector<Bitset>& adj, const CliqueOptions& opts) {
    auto t0 = Clock::now();
    int n = static_cast<int>(adj.size());

    CliqueResult result;
    if (n == 0) return result;

    // Renumber by elimination order so low indices leave the graph first;
    // the greedy coloring then follows the degeneracy structure.
    std::vector<int> order = degeneracy_order(adj);
    std::vector<int> new_id(n);
    for (int i = 0; i < n; ++i) new_id[order[i]] = i;
    std::vector<Bitset> radj(n, Bitset(n));
    for (int v = 0; v < n; ++v)
        for (int w = adj[v].find_next(0); w != -1; w = adj[v].find_next(w + 1))
            radj[new_id[v]].set(new_id[w]);

    std::atomic<int> best{0};
    std::vector<int> best_stack;
    for (size_t i = 0; i < opts.seed_clique.size(); ++i) {
        long long v = opts.seed_clique[i];
        if (v < 0 || v >= n) raise("NotAClique", "seed vertex out of range");
        for (size_t j = i + 1; j < opts.seed_clique.size(); ++j)
            if (!adj[v].test(opts.seed_clique[j]))
                raise("NotAClique", "seed is not a clique");
        best_stack.push_back(new_id[v]);
    }
    // Any vertex is a 1-clique; never return an empty incumbent on timeout.
    if (best_stack.empty()) best_stack.push_back(0);
    best.store(static_cast<int>(best_stack.size()));

    std::atomic<bool> stop{false}, timed_out{false};
    Clock::time_point deadline = t0;
    bool has_deadline = opts.time_limit_ms > 0;
    if (has_deadline)
        deadline = t0 + std::chrono::microseconds(
                            static_cast<long long>(opts.time_limit_ms * 1000.0));
    if (opts.stop_at >= 0 && best.load() >= opts.stop_at) stop.store(true);

    Bitset full(n);
    for (int v = 0; v < n; ++v) full.set(v);

    // Root coloring once; each root branch is an independent subtree over
    // the candidates that come before it in color order.
    Searcher root{radj, best, best_stack, stop, timed_out,
                  opts.stop_at, deadline, has_deadline};
    std::vector<int> rorder, rbound;
    root.color_sort(full, rorder, rbound);
    int m = static_cast<int>(rorder.size());

    unsigned long long total_nodes = 1;
    int threads = std::max(1, opts.thread_count);
    if (threads == 1) {
        Bitset P = full;
        for (int i = m - 1; i >= 0; --i) {
            if (root.stack.size() + rbound[i] <= static_cast<size_t>(best.load())) break;
            if (root.should_stop()) break;
            int v = rorder[i];
            root.stack.push_back(v);
            if (1 > best.load()) root.report(1);
            Bitset next = Bitset::intersection(P, root.adj[v]);
            if (next.any())
                root.expand(next, 1);
            else
                root.report(1);
            root.stack.pop_back();
            P.reset(v);
        }
        total_nodes += root.nodes;
    } else {
        // Root branch i owns candidate set full \ {branches processed
        // before it}, i.e. the vertices at positions < i in color order.
        std::vector<Bitset> route(m, Bitset(0));
        {
            Bitset P = full;
            for (int i = m - 1; i >= 0; --i) {
                route[i] = P;
                P.reset(rorder[i]);
            }
        }
#pragma omp parallel num_threads(threads) reduction(+ : total_nodes)
        {
            Searcher local{radj, best, best_stack, stop, timed_out,
                           opts.stop_at, deadline, has_deadline};
#pragma omp for schedule(dynamic, 1)
            for (int t = 0; t < m; ++t) {
                int i = m - 1 - t;
                if (1 + rbound[i] <= best.load(std::memory_order_relaxed)) continue;
                if (local.should_stop()) continue;
                int v = rorder[i];
                local.stack.assign(1, v);
                if (1 > best.load()) local.report(1);
                Bitset next = Bitset::intersection(route[i], local.adj[v]);
                next.reset(v);
                if (next.any())
                    local.expand(next, 1);
                else
                    local.report(1);
            }
            total_nodes += local.nodes;
        }
    }

    // Map the incumbent back to original ids. A pure-seed incumbent maps
    // back to exactly the seed.
    result.size = best.load();
    result.witness.reserve(best_stack.size());
    for (int v : best_stack) result.witness.push_back(order[v]);
    std::sort(result.witness.begin(), result.witness.end());

    bool proven = opts.stop_at >= 0 && result.size >= opts.stop_at;
    result.status = (timed_out.load() && !proven) ? CliqueStatus::LowerBoundOnly
                                                  : CliqueStatus::Exact;
    result.nodes = total_nodes;

    // Unconditional witness re-verification.
    if (static_cast<int>(result.witness.size()) != result.size)
        raise("NotAClique", "internal: witness size mismatch");
    for (size_t i = 0; i < result.witness.size(); ++i)
        for (size_t j = i + 1; j < result.witness.size(); ++j)
            if (!adj[result.witness[i]].test(result.witness[j]))
                raise("NotAClique", "internal: witness failed re-verification");

    result.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return result;
}

CliqueResult max_clique(const XorGraph& g, const CliqueOptions& opts) {
    return max_clique(g.adj, opts);
}

} // namespace xorclique
