#include "xorclique/latin.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "xorclique/errors.hpp"

namespace xorclique {

std::vector<MolsSquare> mols_from_field(const Field& f) {
    int q = f.q;
    std::vector<MolsSquare> squares;
    squares.reserve(q - 1);
    for (int a = 1; a < q; ++a) {
        MolsSquare s;
        s.n = q;
        s.cells.resize(q * q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) s.at(i, j) = f.add(f.mul(a, i), j);
        squares.push_back(std::move(s));
    }
    return squares;
}

bool verify_latin(const MolsSquare& s) {
    int n = s.n;
    if (static_cast<int>(s.cells.size()) != n * n) return false;
    for (int sym : s.cells)
        if (sym < 0 || sym >= n) return false;
    std::vector<bool> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (int j = 0; j < n; ++j) {
            if (seen[s.at(i, j)]) return false;
            seen[s.at(i, j)] = true;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), false);
        for (int i = 0; i < n; ++i) {
            if (seen[s.at(i, j)]) return false;
            seen[s.at(i, j)] = true;
        }
    }
    return true;
}

bool verify_orthogonal(const MolsSquare& a, const MolsSquare& b) {
    if (a.n != b.n)
        raise("OrderMismatch", "orders " + std::to_string(a.n) + " and " + std::to_string(b.n));
    int n = a.n;
    std::vector<bool> seen(n * n, false);
    for (int c = 0; c < n * n; ++c) {
        int pair = a.cells[c] * n + b.cells[c];
        if (seen[pair]) return false;
        seen[pair] = true;
    }
    return true;
}

SetFamily latin_family_from_mols(const std::vector<MolsSquare>& squares, int k,
                                 bool allow_truncate) {
    int m = static_cast<int>(squares.size());
    if (k < 2)
        raise("TooManySquares", "rows and columns already need 2 of the " + std::to_string(k) +
                                    " B-blocks");
    int used = m;
    if (m > k - 2) {
        if (!allow_truncate)
            raise("TooManySquares", std::to_string(m) + " squares exceed the " +
                                        std::to_string(k - 2) + " spare B-blocks");
        used = k - 2;
    }
    for (int i = 0; i < used; ++i) {
        if (squares[i].n != k)
            raise("OrderMismatch", "square " + std::to_string(i) + " has order " +
                                       std::to_string(squares[i].n) + ", expected " +
                                       std::to_string(k));
        if (!verify_latin(squares[i]))
            raise("NotOrthogonal", "square " + std::to_string(i) + " is not a Latin square");
    }
    for (int i = 0; i < used; ++i)
        for (int j = i + 1; j < used; ++j)
            if (!verify_orthogonal(squares[i], squares[j]))
                raise("NotOrthogonal",
                      "squares " + std::to_string(i) + " and " + std::to_string(j));

    long long N = static_cast<long long>(k) * k;
    SetFamily fam;
    fam.params = {k, N};
    fam.provenance = "latin_mols(k=" + std::to_string(k) + ",m=" + std::to_string(used) + ")";

    auto block = [&](int idx) {  // 0-based block index -> b bitset
        Bitset b(N);
        for (int t = 0; t < k; ++t) b.set(static_cast<long long>(idx) * k + t);
        return b;
    };
    for (int r = 0; r < k; ++r) {  // rows x block 0
        MemberSet ms{Bitset(N), block(0)};
        for (int j = 0; j < k; ++j) ms.a.set(static_cast<long long>(r) * k + j);
        fam.members.push_back(std::move(ms));
    }
    for (int c = 0; c < k; ++c) {  // columns x block 1
        MemberSet ms{Bitset(N), block(1)};
        for (int i = 0; i < k; ++i) ms.a.set(static_cast<long long>(i) * k + c);
        fam.members.push_back(std::move(ms));
    }
    for (int s = 0; s < used; ++s) {  // symbol classes of square s x block s+2
        for (int sym = 0; sym < k; ++sym) {
            MemberSet ms{Bitset(N), block(s + 2)};
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (squares[s].at(i, j) == sym) ms.a.set(static_cast<long long>(i) * k + j);
            fam.members.push_back(std::move(ms));
        }
    }
    return fam;
}

std::vector<MolsSquare> mols_from_latin_family(const SetFamily& fam) {
    int k = fam.params.k;
    long long N = fam.params.N;
    if (N != static_cast<long long>(k) * k)
        raise("NotLatinFamily", "parameters (" + std::to_string(k) + "," + std::to_string(N) +
                                    ") do not satisfy N = k^2");
    if (!verify_semiintersecting(fam).valid)
        raise("NotLatinFamily", "family is not semiintersecting");

    // Group members by B-part; blocks ordered by smallest element.
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(fam.members.size()); ++i)
        groups[fam.members[i].b.to_indices()].push_back(i);

    Bitset covered(N);
    for (const auto& [part, idx] : groups) {
        if (static_cast<int>(idx.size()) != k)
            raise("NotLatinFamily", "a B-block is used " + std::to_string(idx.size()) +
                                        " times, expected " + std::to_string(k));
        for (int p : part) {
            if (covered.test(p)) raise("NotLatinFamily", "B-blocks overlap");
            covered.set(p);
        }
    }
    int l = static_cast<int>(groups.size());
    if (l < 3) raise("TooFewBlocks", "only " + std::to_string(l) + " occupied B-blocks");

    // Members within a group ordered by smallest A-point.
    std::vector<std::vector<int>> ordered;  // ordered[g] = member indices
    for (const auto& [part, idx] : groups) {
        std::vector<int> v = idx;
        std::sort(v.begin(), v.end(), [&](int x, int y) {
            return fam.members[x].a.find_next(0) < fam.members[y].a.find_next(0);
        });
        ordered.push_back(std::move(v));
    }

    // Grid coordinates: group 0 members are the rows, group 1 the columns.
    std::vector<int> row_of(N, -1), col_of(N, -1);
    for (int r = 0; r < k; ++r)
        for (int a : fam.members[ordered[0][r]].a.to_indices()) row_of[a] = r;
    for (int c = 0; c < k; ++c)
        for (int a : fam.members[ordered[1][c]].a.to_indices()) col_of[a] = c;
    std::vector<int> cell_used(k * k, 0);
    for (long long a = 0; a < N; ++a) {
        if (row_of[a] < 0 || col_of[a] < 0)
            raise("NotLatinFamily", "rows or columns do not partition A");
        if (cell_used[row_of[a] * k + col_of[a]]++)
            raise("NotLatinFamily", "two A-points share a grid cell");
    }

    std::vector<MolsSquare> out;
    for (int g = 2; g < l; ++g) {
        MolsSquare s;
        s.n = k;
        s.cells.assign(k * k, -1);
        for (int sym = 0; sym < k; ++sym)
            for (int a : fam.members[ordered[g][sym]].a.to_indices())
                s.at(row_of[a], col_of[a]) = sym;
        if (!verify_latin(s))
            raise("NotLatinFamily", "block " + std::to_string(g) + " does not induce a Latin square");
        out.push_back(std::move(s));
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (!verify_orthogonal(out[i], out[j]))
                raise("NotLatinFamily", "induced squares are not orthogonal");
    return out;
}

std::vector<MolsSquare> squares_from_text(std::istream& in) {
    std::vector<MolsSquare> out;
    std::string line;
    std::vector<std::vector<int>> rows;
    auto flush = [&]() {
        if (rows.empty()) return;
        int n = static_cast<int>(rows.size());
        MolsSquare s;
        s.n = n;
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n)
                raise("BadInput", "square is not n x n");
            for (int sym : r) {
                if (sym < 0 || sym >= n) raise("BadInput", "symbol out of range");
                s.cells.push_back(sym);
            }
        }
        out.push_back(std::move(s));
        rows.clear();
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int sym;
        while (ls >> sym) row.push_back(sym);
        if (!ls.eof())
            raise("BadInput", "non-numeric token in square file");
        if (row.empty())
            flush();
        else
            rows.push_back(std::move(row));
    }
    flush();
    return out;
}

void square_to_text(const MolsSquare& s, std::ostream& out) {
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) {
            if (j) out << ' ';
            out << s.at(i, j);
        }
        out << '\n';
    }
}

} // namespace xorclique
