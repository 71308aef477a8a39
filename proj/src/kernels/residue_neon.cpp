#include "variants.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include <vector>

namespace kgap::kernels::detail {

void residue_norms_neon(const ResidueSweep& sweep, std::span<std::int32_t> out)
{
    constexpr std::size_t lanes = 4;
    const std::size_t dim = sweep.steps.size();
    const std::int32_t D = sweep.modulus;
    const int32x4_t modulus = vdupq_n_s32(D);

    std::vector<int32x4_t> residues(dim);
    std::vector<int32x4_t> steps(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::int32_t init[lanes];
        for (std::size_t j = 0; j < lanes; ++j) {
            init[j] = residue_at(static_cast<std::int64_t>(j), sweep.steps[i], D);
        }
        residues[i] = vld1q_s32(init);
        steps[i] = vdupq_n_s32(residue_at(lanes, sweep.steps[i], D));
    }

    const bool use_max = sweep.reduce == Reduce::Max;
    std::size_t k = 0;
    for (; k + lanes <= out.size(); k += lanes) {
        int32x4_t acc = vdupq_n_s32(0);
        for (std::size_t i = 0; i < dim; ++i) {
            const int32x4_t r = residues[i];
            const int32x4_t dist = vminq_s32(r, vsubq_s32(modulus, r));
            acc = use_max ? vmaxq_s32(acc, dist) : vaddq_s32(acc, dist);
            int32x4_t next = vaddq_s32(r, steps[i]);
            const uint32x4_t wrap = vcgeq_s32(next, modulus);
            next = vsubq_s32(next, vandq_s32(vreinterpretq_s32_u32(wrap), modulus));
            residues[i] = next;
        }
        vst1q_s32(out.data() + k, acc);
    }
    residue_norms_tail(sweep, out, k);
}

}  // namespace kgap::kernels::detail

#else

namespace kgap::kernels::detail {

void residue_norms_neon(const ResidueSweep& sweep, std::span<std::int32_t> out)
{
    // Never selected: isa_available(Isa::Neon) is false off ARM.
    residue_norms_scalar(sweep, out);
}

}  // namespace kgap::kernels::detail

#endif
