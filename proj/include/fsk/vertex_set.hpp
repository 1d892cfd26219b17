#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "fsk/simd.hpp"

namespace fsk {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

// Fixed-universe bitset over vertex ids 0..universe()-1. Binary operations
// require both operands to share the same universe.
class VertexSet {
public:
    using Word = simd::Word;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : n_(universe), words_(word_count(universe), 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const { return n_; }

    bool contains(Vertex v) const {
        return v < n_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
    }
    void insert(Vertex v) { words_[checked(v) / kWordBits] |= Word{1} << (v % kWordBits); }
    void erase(Vertex v) { words_[checked(v) / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
    void clear();

    std::size_t count() const;
    bool empty() const;
    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    std::size_t count_common(const VertexSet& other) const;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    // In-place forms that reuse this set's storage: *this = a OP b.
    void assign_and(const VertexSet& a, const VertexSet& b);
    void assign_or(const VertexSet& a, const VertexSet& b);
    void assign_andnot(const VertexSet& a, const VertexSet& b);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    // Complement within the universe.
    VertexSet complement() const;

    // Smallest member >= from, or kNoVertex.
    Vertex next(Vertex from) const;
    Vertex first() const { return next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                f(static_cast<Vertex>(w * kWordBits + bit));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const;

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

private:
    static std::size_t word_count(std::size_t universe) { return (universe + kWordBits - 1) / kWordBits; }
    Vertex checked(Vertex v) const;
    void require_same_universe(const VertexSet& other) const;

    std::size_t n_ = 0;
    std::vector<Word> words_;
};

}  // namespace fsk
