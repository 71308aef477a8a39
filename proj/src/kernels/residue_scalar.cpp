#include <algorithm>
#include <climits>
#include <vector>

#include "kgap/rational.hpp"
#include "variants.hpp"

namespace kgap::kernels::detail {

void residue_norms_tail(const ResidueSweep& sweep, std::span<std::int32_t> out, std::size_t first)
{
    const std::int32_t D = sweep.modulus;
    std::vector<std::int32_t> r(sweep.steps.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = residue_at(static_cast<std::int64_t>(first), sweep.steps[i], D);
    }
    for (std::size_t k = first; k < out.size(); ++k) {
        std::int32_t acc = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            const std::int32_t dist = std::min(r[i], D - r[i]);
            acc = sweep.reduce == Reduce::Max ? std::max(acc, dist) : acc + dist;
            r[i] += sweep.steps[i];
            if (r[i] >= D) {
                r[i] -= D;
            }
        }
        out[k] = acc;
    }
}

void residue_norms_scalar(const ResidueSweep& sweep, std::span<std::int32_t> out)
{
    residue_norms_tail(sweep, out, 0);
}

}  // namespace kgap::kernels::detail

namespace kgap::kernels {

bool wide_sweep_fits(std::size_t dim, std::int64_t modulus, Reduce reduce)
{
    if (dim == 0 || modulus < 1 || modulus > wide_max_modulus) {
        return false;
    }
    return reduce == Reduce::Max || static_cast<std::int64_t>(dim) <= INT64_MAX / (modulus / 2 + 1);
}

void residue_norms_wide(std::span<const std::int64_t> steps, std::int64_t modulus, Reduce reduce,
                        std::span<std::int64_t> out)
{
    if (!wide_sweep_fits(steps.size(), modulus, reduce)) {
        throw Error("residue sweep out of range for int64");
    }
    std::vector<std::int64_t> r(steps.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (steps[i] < 0 || steps[i] >= modulus) {
            throw Error("residue sweep step outside [0, modulus)");
        }
    }
    for (auto& o : out) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            const std::int64_t dist = std::min(r[i], modulus - r[i]);
            acc = reduce == Reduce::Max ? std::max(acc, dist) : acc + dist;
            r[i] += steps[i];
            if (r[i] >= modulus) {
                r[i] -= modulus;
            }
        }
        o = acc;
    }
}

}  // namespace kgap::kernels
