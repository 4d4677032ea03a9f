#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace dicyclic {

// Fixed-size set of small integer indices, one bit per index.
// Used for subgroup membership, adjacency rows and BFS level masks.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

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

    IndexSet& operator|=(const IndexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    IndexSet& operator&=(const IndexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

    static int and_count(const IndexSet& a, const IndexSet& b) {
        int c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                fn(int(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace dicyclic
