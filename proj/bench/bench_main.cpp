#include <benchmark/benchmark.h>

#include "xorclique/clique.hpp"
#include "xorclique/constructions.hpp"
#include "xorclique/family.hpp"
#include "xorclique/graph.hpp"
#include "xorclique/reference.hpp"

using namespace xorclique;

// 810 members, 327k pairs: enough for the row-parallel verifier to matter.
static const SetFamily& big_family() {
    static SetFamily fam = stacked_affine(9, 10);
    return fam;
}

static void BM_verify_parallel(benchmark::State& state) {
    const SetFamily& fam = big_family();
    for (auto _ : state) {
        VerificationReport rep = verify_semiintersecting(fam);
        benchmark::DoNotOptimize(rep.valid);
    }
}
BENCHMARK(BM_verify_parallel);

static void BM_verify_serial_reference(benchmark::State& state) {
    const SetFamily& fam = big_family();
    for (auto _ : state) {
        VerificationReport rep = reference::verify_semiintersecting_naive(fam);
        benchmark::DoNotOptimize(rep.valid);
    }
}
BENCHMARK(BM_verify_serial_reference);

// C(10,2)^2 = 2025 vertices, ~4.1M adjacency entries per build.
static void BM_xor_build_parallel(benchmark::State& state) {
    for (auto _ : state) {
        XorGraph g = build_xor_product(10, 2);
        benchmark::DoNotOptimize(g.edges);
    }
}
BENCHMARK(BM_xor_build_parallel);

static void BM_xor_build_serial_reference(benchmark::State& state) {
    for (auto _ : state) {
        std::vector<Bitset> adj = reference::xor_adjacency_naive(10, 2);
        benchmark::DoNotOptimize(adj.size());
    }
}
BENCHMARK(BM_xor_build_serial_reference);

static void BM_clique_branch_bound(benchmark::State& state) {
    XorGraph g = build_xor_product(5, 2);
    CliqueOptions opts;
    opts.thread_count = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CliqueResult res = max_clique(g, opts);
        benchmark::DoNotOptimize(res.size);
    }
}
BENCHMARK(BM_clique_branch_bound)->Arg(1)->Arg(4);

static void BM_clique_naive_reference(benchmark::State& state) {
    XorGraph g = build_xor_product(5, 2);
    for (auto _ : state) {
        reference::NaiveCliqueResult res = reference::max_clique_naive(g.adj);
        benchmark::DoNotOptimize(res.size);
    }
}
BENCHMARK(BM_clique_naive_reference);

BENCHMARK_MAIN();
