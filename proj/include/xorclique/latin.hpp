#pragma once

#include <iosfwd>
#include <vector>

#include "xorclique/family.hpp"
#include "xorclique/field.hpp"

namespace xorclique {

/// n x n square over symbols 0..n-1, row-major cells.
struct MolsSquare {
    int n = 0;
    std::vector<int> cells;

    int at(int i, int j) const { return cells[i * n + j]; }
    int& at(int i, int j) { return cells[i * n + j]; }
    bool operator==(const MolsSquare&) const = default;
};

/// The q-1 pairwise orthogonal squares L_a(i,j) = a*i + j, a != 0.
std::vector<MolsSquare> mols_from_field(const Field& f);

/// Every row and every column is a permutation of 0..n-1.
bool verify_latin(const MolsSquare& s);

/// The n^2 ordered cell pairs (a[i][j], b[i][j]) are all distinct.
/// Throws OrderMismatch if the orders differ.
bool verify_orthogonal(const MolsSquare& a, const MolsSquare& b);

/// Family with parameters (k, k^2) of size k*(m+2) from m pairwise
/// orthogonal order-k squares: rows of the k x k point grid paired with
/// B-block 1, columns with block 2, and the symbol classes of square i
/// with block i+2. B-block i (1-based) is {N+(i-1)k .. N+ik-1}.
/// m > k-2 squares exceed the B-block capacity: TooManySquares when
/// allow_truncate is false, otherwise only the first k-2 squares are used.
SetFamily latin_family_from_mols(const std::vector<MolsSquare>& squares, int k,
                                 bool allow_truncate = false);

/// Inverse bridge: a family whose B-parts are k disjoint blocks each used
/// exactly k times yields l-2 pairwise orthogonal squares, where l is the
/// number of occupied blocks (blocks ordered by smallest element; members
/// within a block ordered by smallest A-point). Throws NotLatinFamily if
/// the structure is absent, TooFewBlocks if l < 3.
std::vector<MolsSquare> mols_from_latin_family(const SetFamily& fam);

/// Text format: n lines of n space-separated symbols. A stream may hold
/// several squares separated by blank lines.
std::vector<MolsSquare> squares_from_text(std::istream& in);
void square_to_text(const MolsSquare& s, std::ostream& out);

} // namespace xorclique
