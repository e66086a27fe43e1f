#pragma once

#include <cstdint>
#include <cstddef>
#include <bit>
#include <vector>

namespace xorclique {

/// Dynamically sized bitset backed by 64-bit words. Trailing bits past
/// size() are kept zero so whole-word operations stay valid.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0), n_(n) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    void and_with(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }
    void or_with(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }
    void andnot_with(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// First set bit at or after position `from`; -1 if none.
    int find_next(std::size_t from = 0) const {
        if (from >= n_) return -1;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>((wi << 6) + std::countr_zero(w));
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int v = find_next(0); v >= 0; v = find_next(static_cast<std::size_t>(v) + 1))
            out.push_back(v);
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    static Bitset intersection(const Bitset& a, const Bitset& b) {
        Bitset r = a;
        r.and_with(b);
        return r;
    }

private:
    std::vector<std::uint64_t> words_;
    std::size_t n_ = 0;
};

} // namespace xorclique
