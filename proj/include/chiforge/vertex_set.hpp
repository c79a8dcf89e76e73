#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace chiforge {

inline constexpr int kMaxVertices = 256;

// Fixed-width bitset over vertex indices 0..kMaxVertices-1.
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    VertexSet() = default;
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }
    static VertexSet from_vector(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }
    static VertexSet range(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.w_[w] = n >= 64 ? ~0ULL : ((1ULL << n) - 1);
        return s;
    }
    static VertexSet single(int v) {
        VertexSet s;
        s.insert(v);
        return s;
    }

    void insert(int v) { w_[v >> 6] |= 1ULL << (v & 63); }
    void erase(int v) { w_[v >> 6] &= ~(1ULL << (v & 63)); }
    bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1ULL; }

    int size() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    // least element, or -1
    int first() const { return next(0); }
    // least element >= from, or -1
    int next(int from) const {
        if (from >= kMaxVertices) return -1;
        int w = from >> 6;
        std::uint64_t x = w_[w] & (~0ULL << (from & 63));
        while (true) {
            if (x) return (w << 6) + std::countr_zero(x);
            if (++w == kWords) return -1;
            x = w_[w];
        }
    }
    int last() const {
        for (int w = kWords - 1; w >= 0; --w)
            if (w_[w]) return (w << 6) + 63 - std::countl_zero(w_[w]);
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }
    std::string str() const;

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : w_) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
        return static_cast<std::size_t>(h);
    }
    const std::array<std::uint64_t, kWords>& words() const { return w_; }

    class iterator {
    public:
        iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = s_->next(v_ + 1);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }
        bool operator==(const iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* s_;
        int v_;
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    std::array<std::uint64_t, kWords> w_{};
};

// Orders sets by least element, then by the sorted element sequence.
bool least_index_less(const VertexSet& a, const VertexSet& b);

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace chiforge
