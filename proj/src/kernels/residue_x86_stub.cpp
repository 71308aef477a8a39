#include "variants.hpp"

// Built only when the x86 kernels are not; isa_available() never selects these.

namespace kgap::kernels::detail {

void residue_norms_sse41(const ResidueSweep& sweep, std::span<std::int32_t> out)
{
    residue_norms_scalar(sweep, out);
}

void residue_norms_avx2(const ResidueSweep& sweep, std::span<std::int32_t> out)
{
    residue_norms_scalar(sweep, out);
}

}  // namespace kgap::kernels::detail
