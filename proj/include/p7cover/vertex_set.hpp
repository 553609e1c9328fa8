#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "errors.hpp"

namespace p7cover {

using Vertex = std::uint32_t;

// Hard capacity of a VertexSet; every graph in the library is bounded by it.
inline constexpr std::size_t kMaxVertices = 256;

/// Fixed-capacity bit-set of vertex ids in [0, kMaxVertices).
///
/// Iteration visits members in ascending order, so a VertexSet doubles as the
/// sorted duplicate-free member list used throughout the library. Ordering
/// (operator<) is by cardinality first, then lexicographic on the sorted
/// member sequence; this is the canonical order of every emitted set list.
class VertexSet {
    static constexpr std::size_t kWordBits = 64;
    static constexpr std::size_t kWords = kMaxVertices / kWordBits;
    using Words = std::array<std::uint64_t, kWords>;

public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;

        Vertex operator*() const { return static_cast<Vertex>(word_ * kWordBits + std::countr_zero(bits_)); }

        const_iterator& operator++() {
            bits_ &= bits_ - 1;
            settle();
            return *this;
        }
        const_iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) {
            return a.word_ == b.word_ && a.bits_ == b.bits_;
        }

    private:
        friend class VertexSet;
        const_iterator(const Words* words, std::size_t word) : words_(words), word_(word) {
            bits_ = word_ < kWords ? (*words_)[word_] : 0;
            settle();
        }
        void settle() {
            while (bits_ == 0 && word_ < kWords) {
                ++word_;
                bits_ = word_ < kWords ? (*words_)[word_] : 0;
            }
        }

        const Words* words_ = nullptr;
        std::size_t word_ = kWords;
        std::uint64_t bits_ = 0;
    };

    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members) {
        for (Vertex v : members) insert(v);
    }
    template <std::input_iterator It>
    VertexSet(It first, It last) {
        for (; first != last; ++first) insert(static_cast<Vertex>(*first));
    }

    /// {0, ..., n-1}
    static VertexSet range(std::size_t n) {
        check_capacity(n);
        VertexSet s;
        for (std::size_t w = 0; w < kWords && n > 0; ++w) {
            const std::size_t take = n < kWordBits ? n : kWordBits;
            s.words_[w] = take == kWordBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
            n -= take;
        }
        return s;
    }

    static void check_capacity(std::size_t n) {
        if (n > kMaxVertices) {
            throw capacity_error("vertex count " + std::to_string(n) + " exceeds capacity " +
                                 std::to_string(kMaxVertices));
        }
    }

    void insert(Vertex v) {
        check_index(v);
        words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
    }
    void erase(Vertex v) {
        check_index(v);
        words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
    }
    bool contains(Vertex v) const {
        if (v >= kMaxVertices) return false;
        return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
    }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member. Precondition: non-empty.
    Vertex front() const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w]) return static_cast<Vertex>(w * kWordBits + std::countr_zero(words_[w]));
        throw input_error("front() of empty vertex set");
    }
    /// One past the largest member; 0 when empty.
    std::size_t upper_bound() const {
        for (std::size_t w = kWords; w-- > 0;)
            if (words_[w]) return w * kWordBits + (kWordBits - std::countl_zero(words_[w]));
        return 0;
    }

    const_iterator begin() const { return const_iterator(&words_, 0); }
    const_iterator end() const { return const_iterator(&words_, kWords); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend VertexSet operator|(VertexSet a, Vertex v) {
        a.insert(v);
        return a;
    }
    friend VertexSet operator-(VertexSet a, Vertex v) {
        a.erase(v);
        return a;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    /// Lexicographic comparison of the sorted member sequences
    /// (a proper prefix sorts first).
    friend bool lex_less(const VertexSet& a, const VertexSet& b) {
        for (std::size_t w = 0; w < kWords; ++w) {
            const std::uint64_t diff = a.words_[w] ^ b.words_[w];
            if (!diff) continue;
            const std::size_t bit = static_cast<std::size_t>(std::countr_zero(diff));
            const Vertex d = static_cast<Vertex>(w * kWordBits + bit);
            if (b.contains(d)) {
                // a continues past the common prefix with something larger, or ends
                return !a.has_member_above(d);
            }
            return b.has_member_above(d);
        }
        return false;
    }

    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        const auto sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        return lex_less(a, b);
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
        return h;
    }

private:
    static void check_index(Vertex v) {
        if (v >= kMaxVertices) {
            throw input_error("vertex id " + std::to_string(v) + " exceeds capacity " + std::to_string(kMaxVertices));
        }
    }
    bool has_member_above(Vertex d) const {
        std::size_t w = d / kWordBits;
        const std::size_t bit = d % kWordBits;
        if (bit + 1 < kWordBits && (words_[w] >> (bit + 1))) return true;
        for (++w; w < kWords; ++w)
            if (words_[w]) return true;
        return false;
    }

    Words words_{};
};

inline std::string to_string(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace p7cover
