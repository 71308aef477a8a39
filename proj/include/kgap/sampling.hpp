#pragma once

// Seeded generators for random exact instances.

#include <cstdint>
#include <random>

#include "kgap/torus_gaps.hpp"

namespace kgap::sampling {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi], identical across standard libraries.
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// p / q with 1 <= q <= den_cap and |p| < q.
Rational rational(Rng& rng, std::int64_t den_cap);

RatVec rational_vector(Rng& rng, std::size_t dim, std::int64_t den_cap);

/// A lattice with rational basis and |det| = 1: a product of a signed
/// permutation, rational shears, and a diagonal scaling diag(a, 1/a).
Lattice unimodular_lattice(Rng& rng, std::size_t dim);

/// Integer matrix with det = +-1 built from elementary shears.
RatMat unimodular_integer_matrix(Rng& rng, std::size_t dim, int steps = 6);

}  // namespace kgap::sampling
