#include "fsk/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fsk::simd {

#ifndef FSK_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool cpu_supports(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
            return false;
#endif
    }
    return false;
}

namespace {

const KernelTable* table_for(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return &scalar_kernels();
        case Isa::Avx2: return avx2_kernels();
    }
    return nullptr;
}

const KernelTable* initial_table() {
    if (const char* forced = std::getenv("FSK_KERNELS")) {
        const std::string name(forced);
        for (Isa isa : available_isas())
            if (isa_name(isa) == name) return table_for(isa);
    }
    const auto isas = available_isas();
    return table_for(isas.back());
}

std::atomic<const KernelTable*>& current() {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::Scalar};
    if (avx2_kernels() != nullptr && cpu_supports(Isa::Avx2)) out.push_back(Isa::Avx2);
    return out;
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

void select(Isa isa) {
    const KernelTable* table = table_for(isa);
    if (table == nullptr || !cpu_supports(isa))
        throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) + "' is not available");
    current().store(table, std::memory_order_relaxed);
}

}  // namespace fsk::simd
