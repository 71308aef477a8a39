#include <smmintrin.h>

#include <vector>

#include "variants.hpp"

namespace kgap::kernels::detail {

void residue_norms_sse41(const ResidueSweep& sweep, std::span<std::int32_t> out)
{
    constexpr std::size_t lanes = 4;
    const std::size_t dim = sweep.steps.size();
    const std::int32_t D = sweep.modulus;
    const __m128i modulus = _mm_set1_epi32(D);
    const __m128i limit = _mm_set1_epi32(D - 1);

    // Wrapped so the vector element type keeps its alignment attributes.
    struct Reg {
        __m128i v;
    };
    std::vector<Reg> residues(dim);
    std::vector<Reg> steps(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        alignas(16) std::int32_t init[lanes];
        for (std::size_t j = 0; j < lanes; ++j) {
            init[j] = residue_at(static_cast<std::int64_t>(j), sweep.steps[i], D);
        }
        residues[i].v = _mm_load_si128(reinterpret_cast<const __m128i*>(init));
        steps[i].v = _mm_set1_epi32(residue_at(lanes, sweep.steps[i], D));
    }

    const bool use_max = sweep.reduce == Reduce::Max;
    std::size_t k = 0;
    for (; k + lanes <= out.size(); k += lanes) {
        __m128i acc = _mm_setzero_si128();
        for (std::size_t i = 0; i < dim; ++i) {
            const __m128i r = residues[i].v;
            const __m128i dist = _mm_min_epi32(r, _mm_sub_epi32(modulus, r));
            acc = use_max ? _mm_max_epi32(acc, dist) : _mm_add_epi32(acc, dist);
            __m128i next = _mm_add_epi32(r, steps[i].v);
            const __m128i wrap = _mm_cmpgt_epi32(next, limit);
            next = _mm_sub_epi32(next, _mm_and_si128(wrap, modulus));
            residues[i].v = next;
        }
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data() + k), acc);
    }
    residue_norms_tail(sweep, out, k);
}

}  // namespace kgap::kernels::detail
