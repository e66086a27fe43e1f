#include "xorclique/field.hpp"

#include <algorithm>
#include <string>

#include "xorclique/errors.hpp"

namespace xorclique {

int Field::inv(int a) const {
    if (a == 0) raise("DivisionByZero", "inverse of zero in GF(" + std::to_string(q) + ")");
    return inv_table[a];
}

bool is_prime_power(int q, int* p_out, int* n_out) {
    if (q < 2) return false;
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) { p = d; break; }
    }
    if (p == 0) p = q;  // q itself is prime
    int n = 0;
    int rest = q;
    while (rest % p == 0) { rest /= p; ++n; }
    if (rest != 1) return false;
    if (p_out) *p_out = p;
    if (n_out) *n_out = n;
    return true;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, ascending powers,
// normalized so the last coefficient is nonzero (empty = zero polynomial).

using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b, int p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Remainder of a modulo m, m monic.
Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    while (a.size() >= m.size()) {
        int lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

int encode(const Poly& a, int p) {
    int v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly decode(int v, int p) {
    Poly a;
    while (v > 0) { a.push_back(v % p); v /= p; }
    return a;
}

// Irreducible over GF(p) iff no monic divisor of degree 1..deg/2.
// Exhaustive trial division; degrees here are tiny.
bool is_irreducible(const Poly& m, int p) {
    int deg = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;  // p^d monic candidates
        for (int low = 0; low < count; ++low) {
            Poly div = decode(low, p);
            div.resize(d + 1, 0);
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

Field field_new(int q, int max_q) {
    int p = 0, n = 0;
    if (!is_prime_power(q, &p, &n))
        raise("NotPrimePower", "q = " + std::to_string(q) + " is not a prime power");
    if (q > max_q)
        raise("TooLarge", "q = " + std::to_string(q) + " exceeds table cap " + std::to_string(max_q));

    Field f;
    f.q = q;
    f.p = p;
    f.n = n;

    // Smallest-encoding monic irreducible of degree n. Encodings of monic
    // degree-n polynomials are p^n + low with low < p^n, so scanning low
    // ascending finds the lexicographically least one. For n = 1 this
    // yields x (low = 0), and quotienting by x is arithmetic mod p.
    int pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    for (int low = 0; low < pn; ++low) {
        Poly m = decode(low, p);
        m.resize(n + 1, 0);
        m[n] = 1;
        if (is_irreducible(m, p)) { f.modulus = m; break; }
    }

    f.add_table.assign(q * q, 0);
    f.mul_table.assign(q * q, 0);
    f.neg_table.assign(q, 0);
    f.inv_table.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        Poly pa = decode(a, p);
        for (int b = 0; b < q; ++b) {
            Poly pb = decode(b, p);
            f.add_table[a * q + b] = encode(poly_add(pa, pb, p), p);
            f.mul_table[a * q + b] = encode(poly_mod(poly_mul(pa, pb, p), f.modulus, p), p);
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (f.add_table[a * q + b] == 0) f.neg_table[a] = b;
            if (a != 0 && f.mul_table[a * q + b] == 1) f.inv_table[a] = b;
        }
    }
    return f;
}

bool verify_field_axioms(const Field& f) {
    int q = f.q;
    for (int a = 0; a < q; ++a) {
        if (f.add(a, 0) != a || f.mul(a, 1) != a) return false;
        if (f.add(a, f.neg(a)) != 0) return false;
        if (a != 0 && f.mul(a, f.inv_table[a]) != 1) return false;
        if (f.mul(a, 0) != 0) return false;
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (f.add(a, b) != f.add(b, a)) return false;
            if (f.mul(a, b) != f.mul(b, a)) return false;
        }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) return false;
                if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return false;
                if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return false;
            }
    return true;
}

bool has_primitive_element(const Field& f) {
    for (int g = 1; g < f.q; ++g) {
        int x = g;
        int order = 1;
        while (x != 1) { x = f.mul(x, g); ++order; }
        if (order == f.q - 1) return true;
    }
    return false;
}

} // namespace xorclique
