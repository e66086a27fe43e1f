#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "xorclique/constructions.hpp"
#include "xorclique/errors.hpp"
#include "xorclique/family.hpp"
#include "xorclique/graph.hpp"
#include "xorclique/reference.hpp"

using namespace xorclique;

TEST_CASE("capped binomials saturate instead of overflowing") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(12, 6) == 924);
    CHECK(binom_capped(10, 3, 1000) == 120);
    CHECK(binom_capped(10, 3, 120) == 120);
    CHECK(binom_capped(10, 3, 119) == 120);  // cap + 1
    CHECK(binom_capped(100, 50, 20000) == 20001);
    CHECK(binom_capped(10000000000LL, 2, 20000) == 20001);
}

TEST_CASE("colex rank and unrank invert each other") {
    CHECK(colex_rank({0, 1, 2}) == 0);
    CHECK(colex_rank({0, 1}) == 0);
    CHECK(colex_rank({0, 2}) == 1);
    CHECK(colex_rank({1, 2}) == 2);
    CHECK(colex_rank({0, 3}) == 3);
    CHECK(colex_unrank(3, 2) == std::vector<int>{0, 3});

    auto subsets = reference::colex_subsets(8, 3);
    REQUIRE(static_cast<long long>(subsets.size()) == binom(8, 3));
    for (long long i = 0; i < static_cast<long long>(subsets.size()); ++i) {
        CHECK(colex_rank(subsets[i]) == i);
        CHECK(colex_unrank(i, 3) == subsets[i]);
    }
}

TEST_CASE("disjointness graph matches the small closed forms") {
    KneserGraph petersen = build_kneser(5, 2);
    CHECK(petersen.vcount == 10);
    CHECK(petersen.edges == 15);
    for (const auto& row : petersen.adj) CHECK(row.count() == 3);

    KneserGraph matching = build_kneser(4, 2);
    CHECK(matching.vcount == 6);
    CHECK(matching.edges == 3);  // each pair disjoint from its complement only

    KneserGraph halves = build_kneser(6, 3);
    CHECK(halves.vcount == 20);
    CHECK(halves.edges == 10);

    // No self loops, symmetric.
    for (long long i = 0; i < petersen.vcount; ++i) {
        CHECK_FALSE(petersen.adj[i].test(static_cast<std::size_t>(i)));
        for (long long j = 0; j < petersen.vcount; ++j)
            CHECK(petersen.adj[i].test(static_cast<std::size_t>(j)) ==
                  petersen.adj[j].test(static_cast<std::size_t>(i)));
    }
}

TEST_CASE("product graph shape for (4,2)") {
    XorGraph g = build_xor_product(4, 2);
    CHECK(g.base == 6);
    CHECK(g.vcount == 36);
    // Each coordinate has 1 disjoint and 5 non-disjoint partners (itself
    // included), so every vertex sees 1*5 + 5*1 = 10 neighbors.
    for (const auto& row : g.adj) CHECK(row.count() == 10);
    CHECK(g.edges == 180);
}

TEST_CASE("parallel product adjacency equals the naive build") {
    for (auto [N, k] : {std::pair{4, 2}, {5, 2}, {5, 1}, {6, 3}}) {
        CAPTURE(N);
        CAPTURE(k);
        XorGraph g = build_xor_product(N, k);
        auto naive = reference::xor_adjacency_naive(N, k);
        REQUIRE(g.adj.size() == naive.size());
        for (std::size_t i = 0; i < naive.size(); ++i) CHECK(g.adj[i] == naive[i]);
    }
}

TEST_CASE("adjacency agrees with the pairwise rule on random vertices") {
    XorGraph g = build_xor_product(6, 2);
    std::mt19937 rng(2026);
    std::uniform_int_distribution<long long> pick(0, g.vcount - 1);
    auto member_of = [&](long long v) {
        MemberSet m{Bitset(static_cast<std::size_t>(g.N)), Bitset(static_cast<std::size_t>(g.N))};
        for (int x : colex_unrank(v / g.base, g.k)) m.a.set(static_cast<std::size_t>(x));
        for (int x : colex_unrank(v % g.base, g.k)) m.b.set(static_cast<std::size_t>(x));
        return m;
    };
    for (int trial = 0; trial < 300; ++trial) {
        long long u = pick(rng), v = pick(rng);
        if (u == v) continue;
        CHECK(g.adj[u].test(static_cast<std::size_t>(v)) ==
              reference::xor_adjacent(member_of(u), member_of(v)));
    }
}

TEST_CASE("vertex caps reject oversized builds") {
    CHECK_THROWS_AS(build_kneser(30, 10), Error);            // C(30,10) ~ 3e7
    CHECK_THROWS_AS(build_xor_product(10, 3, 100), Error);   // 120^2 over cap
    CHECK_THROWS_AS(build_xor_product(300, 2, 20000), Error);
    CHECK_THROWS_WITH_AS(build_kneser(0, 1), "BadInput: need 1 <= k <= N", Error);
    CHECK_NOTHROW(build_xor_product(5, 2, 100));  // exactly at the cap
}

TEST_CASE("plain-text export lists every edge once") {
    XorGraph g = build_xor_product(4, 2);
    std::ostringstream out;
    export_dimacs(g.adj, out);
    std::istringstream in(out.str());
    std::string word;
    in >> word;
    CHECK(word == "p");
    in >> word;
    CHECK(word == "edge");
    long long v = 0, e = 0;
    in >> v >> e;
    CHECK(v == 36);
    CHECK(e == 180);
    long long lines = 0;
    long long u1 = 0, u2 = 0;
    while (in >> word >> u1 >> u2) {
        REQUIRE(word == "e");
        CHECK(u1 >= 1);
        CHECK(u2 <= 36);
        CHECK(u1 != u2);
        CHECK(g.adj[u1 - 1].test(static_cast<std::size_t>(u2 - 1)));
        ++lines;
    }
    CHECK(lines == 180);
}

TEST_CASE("clique membership checks") {
    XorGraph g = build_xor_product(4, 2);
    CHECK(is_clique(g, {}));
    CHECK(is_clique(g, {7}));
    // ({0,1},{0,1}) and ({0,2},{0,2}) intersect on both sides.
    CHECK_FALSE(is_clique(g, {0, 7}));
    SetFamily fam = affine_construction(2);
    auto ids = family_to_clique(g, fam);
    CHECK(ids.size() == 4);
    CHECK(is_clique(g, ids));
    CHECK_THROWS_AS(is_clique(g, {0, 99}), Error);
}

TEST_CASE("family and clique views are interchangeable") {
    SetFamily fam = affine_construction(3);
    XorGraph g = build_xor_product(9, 3);
    auto ids = family_to_clique(g, fam);
    REQUIRE(ids.size() == 9);
    CHECK(is_clique(g, ids));

    SetFamily back = clique_to_family(g, ids);
    CHECK(back.params.k == 3);
    CHECK(back.params.N == 9);
    CHECK(verify_semiintersecting(back).valid);
    // Same member multiset regardless of ordering conventions.
    auto key = [](const SetFamily& f) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> v;
        for (const auto& m : f.members) {
            std::pair<std::vector<int>, std::vector<int>> p;
            for (std::size_t i = 0; i < m.a.size(); ++i)
                if (m.a.test(i)) p.first.push_back(static_cast<int>(i));
            for (std::size_t i = 0; i < m.b.size(); ++i)
                if (m.b.test(i)) p.second.push_back(static_cast<int>(i));
            v.push_back(std::move(p));
        }
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(key(back) == key(fam));

    SetFamily wrong = embed(fam, 10);
    CHECK_THROWS_AS(family_to_clique(g, wrong), Error);  // ParamMismatch

    CHECK_THROWS_WITH_AS(clique_to_family(g, {0, 7}), "NotAClique: vertex set is not a clique",
                         Error);
    SetFamily loose = clique_to_family(g, {0, 7}, false);
    CHECK(loose.size() == 2);
    VerificationReport rep = verify_semiintersecting(loose);
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == ViolationKind::BothSidesIntersecting);
}
