#pragma once

#include <cstdint>
#include <vector>

namespace trackpath {

// Fixed-capacity bitset over vertex ids. Capacity is chosen at construction;
// all binary operations assume equal capacity.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : words_((n + 63) / 64, 0), n_(n) {}

    int capacity() const { return n_; }

    void set(int v) { words_[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                f(int(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    std::vector<std::uint64_t> words_;
    int n_ = 0;
};

} // namespace trackpath
