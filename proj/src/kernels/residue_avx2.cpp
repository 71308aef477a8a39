#include <immintrin.h>

#include <vector>

#include "variants.hpp"

namespace kgap::kernels::detail {

void residue_norms_avx2(const ResidueSweep& sweep, std::span<std::int32_t> out)
{
    constexpr std::size_t lanes = 8;
    const std::size_t dim = sweep.steps.size();
    const std::int32_t D = sweep.modulus;
    const __m256i modulus = _mm256_set1_epi32(D);
    const __m256i limit = _mm256_set1_epi32(D - 1);

    // Wrapped so the vector element type keeps its alignment attributes.
    struct Reg {
        __m256i v;
    };
    std::vector<Reg> residues(dim);
    std::vector<Reg> steps(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        alignas(32) std::int32_t init[lanes];
        for (std::size_t j = 0; j < lanes; ++j) {
            init[j] = residue_at(static_cast<std::int64_t>(j), sweep.steps[i], D);
        }
        residues[i].v = _mm256_load_si256(reinterpret_cast<const __m256i*>(init));
        steps[i].v = _mm256_set1_epi32(residue_at(lanes, sweep.steps[i], D));
    }

    const bool use_max = sweep.reduce == Reduce::Max;
    std::size_t k = 0;
    for (; k + lanes <= out.size(); k += lanes) {
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t i = 0; i < dim; ++i) {
            const __m256i r = residues[i].v;
            const __m256i dist = _mm256_min_epi32(r, _mm256_sub_epi32(modulus, r));
            acc = use_max ? _mm256_max_epi32(acc, dist) : _mm256_add_epi32(acc, dist);
            __m256i next = _mm256_add_epi32(r, steps[i].v);
            const __m256i wrap = _mm256_cmpgt_epi32(next, limit);
            next = _mm256_sub_epi32(next, _mm256_and_si256(wrap, modulus));
            residues[i].v = next;
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), acc);
    }
    residue_norms_tail(sweep, out, k);
}

}  // namespace kgap::kernels::detail
