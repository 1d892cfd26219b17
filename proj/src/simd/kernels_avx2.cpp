// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include "fsk/simd.hpp"

#include <immintrin.h>

namespace fsk::simd {
namespace {

constexpr std::size_t kLane = 4;  // 64-bit words per 256-bit register

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Nibble-lookup popcount (Mula); sums byte counts into four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
    const __m128i sum = _mm_add_epi64(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    return static_cast<std::size_t>(_mm_cvtsi128_si64(sum)) +
           static_cast<std::size_t>(_mm_extract_epi64(sum, 1));
}

inline bool all_zero(__m256i v) { return _mm256_testz_si256(v, v) != 0; }

std::size_t popcount(const Word* a, std::size_t words) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLane <= words; i += kLane) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
    std::size_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
    return total;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLane <= words; i += kLane)
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
    std::size_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
    return total;
}

void and_into(Word* dst, const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
    for (; i < words; ++i) dst[i] = a[i] & b[i];
}

void or_into(Word* dst, const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane) store(dst + i, _mm256_or_si256(load(a + i), load(b + i)));
    for (; i < words; ++i) dst[i] = a[i] | b[i];
}

void andnot_into(Word* dst, const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    // _mm256_andnot_si256(x, y) computes ~x & y.
    for (; i + kLane <= words; i += kLane) store(dst + i, _mm256_andnot_si256(load(b + i), load(a + i)));
    for (; i < words; ++i) dst[i] = a[i] & ~b[i];
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane)
        if (_mm256_testz_si256(load(a + i), load(b + i)) == 0) return true;
    for (; i < words; ++i)
        if ((a[i] & b[i]) != 0) return true;
    return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + kLane <= words; i += kLane)
        if (!all_zero(_mm256_andnot_si256(load(b + i), load(a + i)))) return false;
    for (; i < words; ++i)
        if ((a[i] & ~b[i]) != 0) return false;
    return true;
}

constexpr KernelTable kAvx2{
    Isa::Avx2, popcount, and_popcount, and_into, or_into, andnot_into, intersects, is_subset,
};

}  // namespace

const KernelTable* avx2_kernels() { return &kAvx2; }

}  // namespace fsk::simd
