#include "fsk/simd.hpp"

#include <bit>

namespace fsk::simd {
namespace {

std::size_t popcount(const Word* a, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

void and_into(Word* dst, const Word* a, const Word* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & b[i];
}

void or_into(Word* dst, const Word* a, const Word* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] | b[i];
}

void andnot_into(Word* dst, const Word* a, const Word* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & ~b[i];
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if ((a[i] & b[i]) != 0) return true;
    return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if ((a[i] & ~b[i]) != 0) return false;
    return true;
}

constexpr KernelTable kScalar{
    Isa::Scalar, popcount, and_popcount, and_into, or_into, andnot_into, intersects, is_subset,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace fsk::simd
