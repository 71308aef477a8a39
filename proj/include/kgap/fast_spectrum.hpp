#pragma once

// Integer fast path for gap counting over Z^d, built on the residue-sweep
// kernels. Applies to the max and Manhattan metrics. Common denominators
// that fit an int32 lane use the vector kernels, larger ones up to
// wide_max_modulus the 64-bit scalar sweep; the exact path covers the rest.

#include <cstdint>
#include <optional>
#include <vector>

#include "kgap/kernels.hpp"
#include "kgap/lattice.hpp"

namespace kgap {

struct FastSpectrum {
    /// All gaps are numerators over this common denominator.
    std::int64_t denominator = 1;
    /// deltas[n - 1] is the numerator of the n-th gap.
    std::vector<std::int64_t> deltas;
    std::vector<std::int64_t> distinct;

    std::size_t g() const { return distinct.size(); }
    Rational delta(std::int64_t n) const;
};

/// nullopt when the instance is outside the fast path (Euclidean metric, or
/// a denominator beyond wide_max_modulus). `isa` applies to int32 sweeps.
std::optional<FastSpectrum> fast_gap_spectrum(const RatVec& alpha, std::int64_t N, Metric metric,
                                              kernels::Isa isa = kernels::active_isa());

}  // namespace kgap
