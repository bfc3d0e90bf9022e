#ifndef HARDCORE_BITSET_HPP
#define HARDCORE_BITSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace hardcore {

/// Fixed-width dynamic bitset over {0..n-1}, the vertex-subset workhorse.
/// Word-packed so adjacency intersections are AND-popcount loops.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(uint32_t nbits)
        : nbits_(nbits), words_((nbits + 63u) / 64u, 0u) {}

    static VertexSet full(uint32_t nbits) {
        VertexSet s(nbits);
        for (auto& w : s.words_) w = ~0ull;
        s.clear_tail();
        return s;
    }

    uint32_t capacity() const { return nbits_; }
    size_t word_count() const { return words_.size(); }
    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

    bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63u)) & 1u; }
    void set(uint32_t i) { words_[i >> 6] |= 1ull << (i & 63u); }
    void reset(uint32_t i) { words_[i >> 6] &= ~(1ull << (i & 63u)); }

    uint32_t count() const {
        uint32_t c = 0;
        for (uint64_t w : words_) c += static_cast<uint32_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    /// Number of set bits shared with a raw word row (e.g. an adjacency row).
    uint32_t count_and(std::span<const uint64_t> row) const {
        uint32_t c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += static_cast<uint32_t>(std::popcount(words_[i] & row[i]));
        return c;
    }

    bool intersects(std::span<const uint64_t> row) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & row[i]) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// this &= ~row
    void subtract(std::span<const uint64_t> row) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~row[i];
    }

    void subtract_set(const VertexSet& o) { subtract(o.words()); }

    /// this = row & mask (both must span the same width)
    void assign_and(std::span<const uint64_t> row, const VertexSet& mask) {
        for (size_t i = 0; i < words_.size(); ++i)
            words_[i] = row[i] & mask.words_[i];
    }

    /// First set bit, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// First set bit strictly after `pos`, or -1.
    int next(int pos) const {
        uint32_t i = static_cast<uint32_t>(pos + 1);
        if (i >= nbits_) return -1;
        size_t wi = i >> 6;
        uint64_t w = words_[wi] >> (i & 63u);
        if (w) return static_cast<int>(i + std::countr_zero(w));
        for (++wi; wi < words_.size(); ++wi)
            if (words_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(words_[wi]));
        return -1;
    }

    bool operator==(const VertexSet& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    uint64_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
        for (uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return h;
    }

private:
    void clear_tail() {
        uint32_t tail = nbits_ & 63u;
        if (tail && !words_.empty()) words_.back() &= (1ull << tail) - 1u;
    }

    uint32_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return static_cast<size_t>(s.hash()); }
};

} // namespace hardcore

#endif
