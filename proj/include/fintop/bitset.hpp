#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fintop {

// Fixed-capacity bit set, sized at construction. Rows of order relations and
// element subsets use this; subsets of explicit small spaces (n <= 16) are
// plain std::uint32_t masks instead.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator^=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    // this \ o
    Bitset& andnot(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Smallest set bit at position >= from, or size() if none.
    int next(int from = 0) const {
        if (from >= size_) return size_;
        std::size_t w = static_cast<std::size_t>(from) >> 6;
        std::uint64_t cur = words_[w] >> (from & 63);
        if (cur) return from + std::countr_zero(cur);
        for (++w; w < words_.size(); ++w)
            if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
        return size_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = next(); i < size_; i = next(i + 1)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    // Deterministic total order (by size, then word content).
    friend bool operator<(const Bitset& a, const Bitset& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return a.words_ < b.words_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace fintop
