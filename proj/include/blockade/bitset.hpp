#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace blockade {

// Fixed-universe dynamic bitset; the workhorse behind adjacency rows and
// vertex sets. All operands of binary ops must share a universe size.
class Bitset {
public:
    Bitset() : n_(0) {}
    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : words_) w = 0; }

    void fill() {
        for (auto& w : words_) w = ~uint64_t{0};
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Lowest set bit, or -1.
    int first() const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k * 64 + std::countr_zero(words_[k]));
        return -1;
    }

    // Next set bit strictly after i, or -1.
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t k = size_t(i) >> 6;
        uint64_t w = words_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(k * 64 + std::countr_zero(w));
            if (++k >= words_.size()) return -1;
            w = words_[k];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    // this \ o
    Bitset& operator-=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complemented() const {
        Bitset r(n_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size_t(count()));
        for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }

    static Bitset from_vector(int n, const std::vector<int>& elems) {
        Bitset b(n);
        for (int v : elems) b.set(v);
        return b;
    }

private:
    void trim() {
        if (n_ & 63) words_.back() &= (~uint64_t{0} >> (64 - (n_ & 63)));
        if (n_ == 0 && !words_.empty()) words_.back() = 0;
    }

    int n_;
    std::vector<uint64_t> words_;
};

}  // namespace blockade
