#pragma once

// Gap spectra of Kronecker sequences {n * alpha + L : 1 <= n <= N} on the
// torus R^d / L.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgap/lattice.hpp"

namespace kgap {

struct KroneckerInstance {
    RatVec alpha;
    Lattice lattice;
    std::int64_t N = 1;

    KroneckerInstance(RatVec alpha_, Lattice lattice_, std::int64_t n);
    /// alpha over Z^d.
    KroneckerInstance(RatVec alpha_, std::int64_t n);

    std::size_t dim() const { return alpha.dim(); }

    friend bool operator==(const KroneckerInstance&, const KroneckerInstance&) = default;
};

struct GapSpectrum {
    KroneckerInstance instance;
    Metric metric = Metric::Max;
    /// deltas[n - 1] is the gap of point n; squared for the Euclidean metric.
    std::vector<Rational> deltas;
    /// Sorted ascending, deduplicated.
    std::vector<Rational> distinct;

    std::size_t g() const { return distinct.size(); }
};

/// min over ell in L of the metric distance from x to ell (squared for Euclidean).
Rational torus_norm(const RatVec& x, const Lattice& lattice, Metric metric);

/// Smallest positive distance from n*alpha to {m*alpha + ell : 1 <= m <= N}.
/// Iterates k = m - n over [1 - n, N - n].
Rational delta(std::int64_t n, const KroneckerInstance& inst, Metric metric);

/// All N gaps. Each torus norm |k alpha| is evaluated once for
/// k in [1 - N, N - 1]; the n-th gap is the minimum over its window
/// [1 - n, N - n], maintained with a monotone deque as the window slides.
GapSpectrum gap_spectrum(const KroneckerInstance& inst, Metric metric);

/// Manhattan spectrum for d = 2 via |Q x|_max = |x|_1 with Q = [[1,1],[-1,1]].
/// Throws Error("reduction defined for d=2 only") otherwise.
GapSpectrum manhattan_via_map(const KroneckerInstance& inst);

/// The map Q as it acts on row vectors: x -> x * Q^T.
RatMat manhattan_map();

struct BoundCheck {
    /// Unset when no bound is asserted for (metric, d).
    std::optional<std::int64_t> bound;
    bool ok = true;
    std::string report;
};

/// Known upper bound on g for (metric, d): 2^d + 1 for max; 3 and 5 for
/// Euclidean d = 1, 2; 5 for Manhattan d = 2.
std::optional<std::int64_t> gap_bound(Metric metric, std::size_t d);

BoundCheck check_bound(const GapSpectrum& spectrum);

/// Short human-readable description of an instance.
std::string describe(const KroneckerInstance& inst);

}  // namespace kgap
