#pragma once

// Residue-sweep kernels for Kronecker sequences over Z^d.
//
// With alpha = (a_1, ..., a_d) / D, the point k * alpha reduces mod Z^d to
// r_i(k) / D with r_i(k) = k * a_i mod D, and its distance to the nearest
// integer in coordinate i is min(r_i, D - r_i) / D. A sweep fills, for
// k = 0, 1, ..., the numerator over D of either the max-norm or the l1-norm
// of that distance vector. Consecutive k differ by adding a_i mod D, which
// is what the vector variants exploit (one k per lane).

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace kgap::kernels {

enum class Isa { Scalar, Sse41, Avx2, Neon };

enum class Reduce { Max, Sum };

struct ResidueSweep {
    /// a_i mod D, each in [0, D).
    std::span<const std::int32_t> steps;
    /// D, in [1, max_modulus].
    std::int32_t modulus = 1;
    Reduce reduce = Reduce::Max;
};

/// Largest modulus the int32 lanes accept.
inline constexpr std::int32_t max_modulus = std::int32_t{1} << 30;

/// True when every intermediate of the sweep fits an int32 lane.
bool sweep_fits(std::size_t dim, std::int64_t modulus, Reduce reduce);

/// Largest modulus of the 64-bit scalar sweep.
inline constexpr std::int64_t wide_max_modulus = std::int64_t{1} << 61;

bool wide_sweep_fits(std::size_t dim, std::int64_t modulus, Reduce reduce);

/// Scalar 64-bit sweep from k = 0 for moduli past the int32 lanes. Steps
/// must lie in [0, modulus).
void residue_norms_wide(std::span<const std::int64_t> steps, std::int64_t modulus, Reduce reduce,
                        std::span<std::int64_t> out);

/// out[k] for k = 0 .. out.size() - 1, using the given instruction set.
/// Throws kgap::Error when the instruction set is unavailable or the
/// sweep is out of range.
void residue_norms(const ResidueSweep& sweep, std::span<std::int32_t> out, Isa isa);

/// Same, using active_isa().
void residue_norms(const ResidueSweep& sweep, std::span<std::int32_t> out);

std::string_view to_string(Isa isa);
Isa parse_isa(std::string_view text);

bool isa_available(Isa isa);
std::vector<Isa> available_isas();

/// Best available instruction set, unless KGAP_ISA names another available one.
Isa active_isa();

}  // namespace kgap::kernels
