#pragma once

#include <cstdint>
#include <span>

#include "kgap/kernels.hpp"

namespace kgap::kernels::detail {

void residue_norms_scalar(const ResidueSweep& sweep, std::span<std::int32_t> out);
void residue_norms_sse41(const ResidueSweep& sweep, std::span<std::int32_t> out);
void residue_norms_avx2(const ResidueSweep& sweep, std::span<std::int32_t> out);
void residue_norms_neon(const ResidueSweep& sweep, std::span<std::int32_t> out);

/// r = k * step mod D without overflow.
inline std::int32_t residue_at(std::int64_t k, std::int32_t step, std::int32_t modulus)
{
    return static_cast<std::int32_t>((k % modulus) * step % modulus);
}

/// Scalar fallback for k in [first, out.size()); the vector variants use it for tails.
void residue_norms_tail(const ResidueSweep& sweep, std::span<std::int32_t> out, std::size_t first);

}  // namespace kgap::kernels::detail
