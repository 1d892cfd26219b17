#include "fsk/vertex_set.hpp"

#include <stdexcept>
#include <string>

namespace fsk {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    if (const std::size_t tail = universe % kWordBits; tail != 0) s.words_.back() = (Word{1} << tail) - 1;
    return s;
}

Vertex VertexSet::checked(Vertex v) const {
    if (v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
    return v;
}

void VertexSet::require_same_universe(const VertexSet& other) const {
    if (other.n_ != n_)
        throw std::invalid_argument("vertex sets over different universes (" + std::to_string(n_) + " vs " +
                                    std::to_string(other.n_) + ")");
}

void VertexSet::clear() {
    for (auto& w : words_) w = 0;
}

std::size_t VertexSet::count() const { return simd::active().popcount(words_.data(), words_.size()); }

bool VertexSet::empty() const {
    for (Word w : words_)
        if (w != 0) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    require_same_universe(other);
    return simd::active().intersects(words_.data(), other.words_.data(), words_.size());
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    require_same_universe(other);
    return simd::active().is_subset(words_.data(), other.words_.data(), words_.size());
}

std::size_t VertexSet::count_common(const VertexSet& other) const {
    require_same_universe(other);
    return simd::active().and_popcount(words_.data(), other.words_.data(), words_.size());
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    assign_and(*this, other);
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    assign_or(*this, other);
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    assign_andnot(*this, other);
    return *this;
}

void VertexSet::assign_and(const VertexSet& a, const VertexSet& b) {
    a.require_same_universe(b);
    if (n_ != a.n_) *this = VertexSet(a.n_);
    simd::active().and_into(words_.data(), a.words_.data(), b.words_.data(), words_.size());
}

void VertexSet::assign_or(const VertexSet& a, const VertexSet& b) {
    a.require_same_universe(b);
    if (n_ != a.n_) *this = VertexSet(a.n_);
    simd::active().or_into(words_.data(), a.words_.data(), b.words_.data(), words_.size());
}

void VertexSet::assign_andnot(const VertexSet& a, const VertexSet& b) {
    a.require_same_universe(b);
    if (n_ != a.n_) *this = VertexSet(a.n_);
    simd::active().andnot_into(words_.data(), a.words_.data(), b.words_.data(), words_.size());
}

VertexSet VertexSet::complement() const { return full(n_) - *this; }

Vertex VertexSet::next(Vertex from) const {
    if (from >= n_) return kNoVertex;
    std::size_t w = from / kWordBits;
    Word bits = words_[w] & (~Word{0} << (from % kWordBits));
    while (true) {
        if (bits != 0) return static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        if (++w >= words_.size()) return kNoVertex;
        bits = words_[w];
    }
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

}  // namespace fsk
