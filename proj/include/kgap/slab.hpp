#pragma once

// Lattice-slab formulation of the gap problem.
//
// The points of Z^{d+1} A_{N+}(alpha) are, up to the anisotropic scaling
// diag(1/N+, N+^{1/d}), the pairs (k, k alpha + ell) with k integer and ell
// in L. All counts below are invariant under that scaling, so points are
// kept in these unscaled exact coordinates with u = k / N+.
//
// For t in (0, 1), F(t) is the least |v|_max > 0 over points with
// -t < u < 1 - t. At t = n / N+ the admissible k are exactly 1 - n .. N - n,
// which recovers the n-th gap of the Kronecker sequence.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kgap/torus_gaps.hpp"

namespace kgap {

/// The exact factors of A_{N+}(alpha) = diag(1, M0) [[1, alpha], [0, 1]] diag(1/N+, N+^{1/d}).
/// The irrational scale N+^{1/d} is never materialized.
struct SlabFactors {
    RatMat M0;
    RatVec alpha;
    Rational N_plus;
};

/// Throws Error when the instance's lattice is not unimodular.
SlabFactors build_A(const KroneckerInstance& inst);

struct SlabPoint {
    std::int64_t k = 0;
    RatVec v;
    RatVec ell;
    Rational vnorm;

    friend bool operator==(const SlabPoint&, const SlabPoint&) = default;
};

/// Witnesses of the distinct values of F, strictly increasing in vnorm.
struct CandidateSet {
    std::vector<SlabPoint> points;

    std::size_t K() const { return points.size(); }
};

struct SlabCounts {
    /// |{F(n / N+) : 1 <= n <= N}|; equals the gap count g.
    std::size_t g_slab = 0;
    /// |{F(t) : 0 < t < 1}|.
    std::size_t G = 0;
};

/// Every point (k, k alpha + ell) with |k| <= N and 0 < |v|_max <= radius.
/// Sorted by (k, v).
std::vector<SlabPoint> slab_points(const KroneckerInstance& inst, const Rational& radius);

/// min{|v|_max > 0 : |k| < N+ / 2}, found by radius doubling from the
/// Minkowski radius (2 / N+)^{1/d}. No value of F exceeds it.
Rational global_bound(const KroneckerInstance& inst);

/// Cached slab analysis of one instance: the points within global_bound
/// and the breakpoint sweep of F over t.
class Slab {
public:
    explicit Slab(KroneckerInstance inst);

    const KroneckerInstance& instance() const { return inst_; }
    const SlabFactors& factors() const { return factors_; }
    const Rational& radius() const { return radius_; }
    const std::vector<SlabPoint>& points() const { return points_; }

    /// F(t) for rational t in (0, 1).
    Rational F_at(const Rational& t) const;
    /// F(n / N+), 1 <= n <= N.
    Rational F(std::int64_t n) const;

    /// Sorted distinct breakpoints -u and 1 - u that fall in (0, 1).
    std::vector<Rational> breakpoints() const;

    CandidateSet candidate_set() const;
    SlabCounts counts() const;

private:
    KroneckerInstance inst_;
    SlabFactors factors_;
    Rational radius_;
    std::vector<SlabPoint> points_;
    // Smallest vnorm per k, for k in [-N, N] (absent k have no point).
    std::map<std::int64_t, Rational> best_by_k_;

    struct Window {
        std::int64_t lo;
        std::int64_t hi;
    };
    Window window_at(const Rational& t) const;
    Rational min_over(Window w) const;
};

Rational F_exact(const KroneckerInstance& inst, std::int64_t n);
CandidateSet candidate_set(const KroneckerInstance& inst);
SlabCounts gap_count_via_slab(const KroneckerInstance& inst);

/// Per-coordinate sgn(k) * sgn(v_j); 0 is a wildcard (v_j = 0 or k = 0).
using OrthantSignature = std::vector<int>;

OrthantSignature orthant_signature(const SlabPoint& p);
/// True unless some coordinate has strictly opposite signs.
bool share_closed_orthant(const OrthantSignature& a, const OrthantSignature& b);
/// "+", "-", "*" per coordinate.
std::string to_string(const OrthantSignature& s);

}  // namespace kgap
