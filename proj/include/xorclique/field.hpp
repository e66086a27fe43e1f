#pragma once

#include <vector>

namespace xorclique {

/// Finite field GF(q), q = p^n a prime power, with dense q x q lookup
/// tables. Elements are integer indices 0..q-1; index encodes the
/// polynomial representation sum c_i x^i as sum c_i p^i, so 0 and 1 are
/// the additive and multiplicative identities.
struct Field {
    int q = 0;  // element count
    int p = 0;  // characteristic
    int n = 0;  // extension degree, q = p^n

    /// Monic irreducible modulus, coefficients in ascending power order
    /// (size n+1, leading coefficient 1). For n = 1 this is x.
    std::vector<int> modulus;

    std::vector<int> add_table;  // q*q, row-major
    std::vector<int> mul_table;  // q*q, row-major
    std::vector<int> neg_table;  // q
    std::vector<int> inv_table;  // q, entry 0 unused

    int add(int a, int b) const { return add_table[a * q + b]; }
    int mul(int a, int b) const { return mul_table[a * q + b]; }
    int neg(int a) const { return neg_table[a]; }
    int inv(int a) const;  // throws DivisionByZero for a = 0
    int sub(int a, int b) const { return add(a, neg(b)); }
};

inline constexpr int kDefaultFieldCap = 64;

/// True iff q = p^n for a prime p and n >= 1; outputs p and n when asked.
bool is_prime_power(int q, int* p_out = nullptr, int* n_out = nullptr);

/// Builds GF(q). For prime powers the modulus is the monic irreducible
/// polynomial of degree n with the smallest integer encoding sum c_i p^i,
/// found by exhaustive trial division. Throws NotPrimePower, or TooLarge
/// when q exceeds max_q.
Field field_new(int q, int max_q = kDefaultFieldCap);

/// Exhaustive check of the field axioms over all pairs/triples:
/// commutativity, associativity, distributivity, identities, inverses.
bool verify_field_axioms(const Field& f);

/// Some element has multiplicative order q-1 (the nonzero elements form a
/// cyclic group).
bool has_primitive_element(const Field& f);

} // namespace xorclique
