#pragma once

// Word-level bitset kernels. Every kernel has a portable scalar reference
// implementation; wider variants are compiled separately and chosen once at
// startup from the CPU's capabilities. All variants must agree bit-for-bit
// with the scalar reference (see tests/unit/test_simd.cpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fsk::simd {

using Word = std::uint64_t;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
    Isa isa;
    std::size_t (*popcount)(const Word* a, std::size_t words);
    std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
    void (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t words);
    void (*or_into)(Word* dst, const Word* a, const Word* b, std::size_t words);
    void (*andnot_into)(Word* dst, const Word* a, const Word* b, std::size_t words);  // a & ~b
    bool (*intersects)(const Word* a, const Word* b, std::size_t words);
    bool (*is_subset)(const Word* a, const Word* b, std::size_t words);  // (a & ~b) == 0
};

const KernelTable& scalar_kernels();

// Null when the variant was not compiled in.
const KernelTable* avx2_kernels();

bool cpu_supports(Isa isa);

// Every variant both compiled in and supported by this CPU, scalar first.
std::vector<Isa> available_isas();

// The table used by VertexSet. Chosen on first use: the widest available
// variant, unless the FSK_KERNELS environment variable names another one
// ("scalar", "avx2").
const KernelTable& active();

// Overrides the active table. Throws std::invalid_argument when the variant is
// unavailable. Not thread-safe with concurrent kernel users.
void select(Isa isa);

}  // namespace fsk::simd
