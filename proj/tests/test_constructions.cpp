#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "xorclique/constructions.hpp"
#include "xorclique/errors.hpp"
#include "xorclique/family.hpp"

using namespace xorclique;

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

} // namespace

TEST_CASE("affine construction sizes and validity") {
    SetFamily f2 = affine_construction(2);
    CHECK(f2.params.k == 2);
    CHECK(f2.params.N == 4);
    CHECK(f2.size() == 4);

    SetFamily f3 = affine_construction(3);
    CHECK(f3.size() == 9);
    VerificationReport rep = verify_semiintersecting(f3);
    CHECK(rep.valid);
    CHECK(rep.violations.empty());

    for (int p : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(p);
        SetFamily fam = affine_construction(p);
        CHECK(fam.params.k == p);
        CHECK(fam.params.N == static_cast<long long>(p) * p);
        CHECK(fam.size() == static_cast<long long>(p) * p);
        CHECK(verify_semiintersecting(fam).valid);
        CHECK(starts_with(fam.provenance, "affine(p="));
    }

    CHECK_THROWS_AS(affine_construction(6), Error);
    try {
        affine_construction(6);
    } catch (const Error& e) {
        CHECK(e.code() == "NotPrimePower");
    }
}

TEST_CASE("stacked affine sizes and validity") {
    SetFamily f23 = stacked_affine(2, 3);
    CHECK(f23.params.k == 2);
    CHECK(f23.params.N == 12);
    CHECK(f23.size() == 12);
    CHECK(verify_semiintersecting(f23).valid);

    SetFamily f32 = stacked_affine(3, 2);
    CHECK(f32.params.N == 18);
    CHECK(f32.size() == 18);
    CHECK(verify_semiintersecting(f32).valid);

    // l = 1 degenerates to the affine construction's size.
    CHECK(stacked_affine(5, 1).size() == affine_construction(5).size());

    CHECK_THROWS_AS(stacked_affine(2, 4), Error);
    CHECK_THROWS_AS(stacked_affine(2, 0), Error);
    try {
        stacked_affine(2, 4);
    } catch (const Error& e) {
        CHECK(e.code() == "TooManyCopies");
    }
}

TEST_CASE("stacked affine validity for all admissible parameters") {
    for (int p : {2, 3, 4, 5, 7, 8, 9}) {
        for (int l = 1; l <= p + 1; ++l) {
            CAPTURE(p);
            CAPTURE(l);
            SetFamily fam = stacked_affine(p, l);
            REQUIRE(fam.size() == static_cast<long long>(l) * p * p);
            REQUIRE(fam.params.N == static_cast<long long>(l) * p * p);
            REQUIRE(verify_semiintersecting(fam).valid);
        }
    }
}

TEST_CASE("big-N construction") {
    SetFamily f28 = big_n_construction(2, 8);
    CHECK(f28.params.N == 8);
    CHECK(f28.size() == 8);  // floor(8/2) - 4 + 8
    CHECK(verify_semiintersecting(f28).valid);

    SetFamily f212 = big_n_construction(2, 12);
    CHECK(f212.size() == 10);  // floor(12/2) + 4
    CHECK(verify_semiintersecting(f212).valid);

    SetFamily f327 = big_n_construction(3, 27);
    CHECK(f327.size() == 27);
    CHECK(verify_semiintersecting(f327).valid);

    CHECK_THROWS_AS(big_n_construction(2, 7), Error);
    try {
        big_n_construction(2, 7);
    } catch (const Error& e) {
        CHECK(e.code() == "NTooSmall");
    }

    // Sizes: floor(N/p) - p^2 + p^3, always p^3 - p^2 above trivial.
    for (int p : {2, 3}) {
        for (long long N : {static_cast<long long>(p * p * p), p * p * p + 1LL,
                            p * p * p + 5LL, 4LL * p * p * p}) {
            CAPTURE(p);
            CAPTURE(N);
            SetFamily fam = big_n_construction(p, N);
            long long trivial = N / p;
            REQUIRE(fam.size() == trivial - p * p + static_cast<long long>(p) * p * p);
            REQUIRE(fam.size() - trivial == static_cast<long long>(p) * p * p - p * p);
            REQUIRE(verify_semiintersecting(fam).valid);
        }
    }
}

TEST_CASE("weighted construction") {
    SetFamily f53 = weighted_pk_construction(5, 3);
    CHECK(f53.params.k == 5);
    CHECK(f53.params.N == 15);
    CHECK(f53.size() == 9);
    CHECK(verify_semiintersecting(f53).valid);

    // k = p gives weight 1 everywhere: the affine family itself.
    SetFamily f33 = weighted_pk_construction(3, 3);
    CHECK(f33.size() == 9);
    CHECK(f33.params.N == 9);
    CHECK(f33.members == affine_construction(3).members);

    SetFamily f42 = weighted_pk_construction(4, 2);
    CHECK(f42.params.N == 8);
    CHECK(f42.size() == 4);
    CHECK(verify_semiintersecting(f42).valid);

    CHECK_THROWS_AS(weighted_pk_construction(2, 3), Error);
    try {
        weighted_pk_construction(2, 3);
    } catch (const Error& e) {
        CHECK(e.code() == "PTooLarge");
    }

    for (int k = 2; k <= 9; ++k) {
        for (int p : {2, 3, 4, 5, 7, 8, 9}) {
            if (p > k) continue;
            CAPTURE(k);
            CAPTURE(p);
            SetFamily fam = weighted_pk_construction(k, p);
            REQUIRE(fam.params.k == k);
            REQUIRE(fam.params.N == static_cast<long long>(p) * k);
            REQUIRE(fam.size() == static_cast<long long>(p) * p);
            REQUIRE(verify_semiintersecting(fam).valid);
        }
    }
}

TEST_CASE("dispatcher hits the documented values") {
    LowerBound b = best_known_lower(2, 100);
    CHECK(b.value == 54);
    REQUIRE(b.witness.has_value());
    CHECK(starts_with(b.witness->provenance, "big_n("));
    CHECK(b.witness->size() == 54);
    CHECK(verify_semiintersecting(*b.witness).valid);

    LowerBound b636 = best_known_lower(6, 36);
    CHECK(b636.value == 25);
    CHECK(b636.witness->provenance.find("weighted(k=6,p=5)") != std::string::npos);
    CHECK(b636.witness->params.N == 36);
    CHECK(verify_semiintersecting(*b636.witness).valid);

    LowerBound b15 = best_known_lower(1, 5);
    CHECK(b15.value == 5);
    CHECK(b15.witness->size() == 5);

    // At N = 12 the three-copy stack beats the big-N family (12 > 10).
    LowerBound b212 = best_known_lower(2, 12);
    CHECK(b212.value == 12);
    CHECK(starts_with(b212.witness->provenance, "stacked_affine("));

    // Tie at 4 between a divisor lift and the weighted family goes to
    // weighted (fixed branch priority).
    LowerBound b816 = best_known_lower(8, 16);
    CHECK(b816.value == 4);
    CHECK(starts_with(b816.witness->provenance, "weighted("));

    // k = 6 has no plane of its own; halving to (3,27) gives 27, beating
    // the weighted family's 25.
    LowerBound b654 = best_known_lower(6, 54);
    CHECK(b654.value == 27);
    CHECK(starts_with(b654.witness->provenance, "divisor_lift(d=2,"));
    CHECK(b654.witness->params.k == 6);
    CHECK(b654.witness->params.N == 54);
    CHECK(verify_semiintersecting(*b654.witness).valid);
}

TEST_CASE("dispatcher monotone in N and witness always matches value") {
    for (int k = 1; k <= 6; ++k) {
        long long prev = 0;
        for (long long N = k; N <= 40; ++N) {
            CAPTURE(k);
            CAPTURE(N);
            LowerBound b = best_known_lower(k, N);
            REQUIRE(b.value >= prev);
            prev = b.value;
            REQUIRE(b.witness.has_value());
            REQUIRE(b.witness->size() == b.value);
            REQUIRE(b.witness->params.k == k);
            REQUIRE(b.witness->params.N == N);
            REQUIRE(verify_semiintersecting(*b.witness).valid);
        }
    }
}
