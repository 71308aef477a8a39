#pragma once

// Floating-point slab analysis for an arbitrary unimodular lattice
// Z^{d+1} M in R^{d+1}, written as points (u, v) with u the first coordinate.

#include <cstddef>
#include <vector>

#include "kgap/torus_gaps.hpp"

namespace kgap {

struct GenericLattice {
    /// (d+1) x (d+1), rows are basis vectors.
    std::vector<std::vector<double>> basis;
    /// Absolute tolerance for slab membership and for merging values.
    double tolerance = 1e-9;

    std::size_t dim() const { return basis.size(); }
};

struct GenericOptions {
    /// Largest |v|_max radius the witness search may reach.
    double radius_cap = 1e6;
    /// Largest number of enumeration nodes per query.
    std::size_t node_cap = 50'000'000;
};

/// Number of distinct values of F(M, t) over t in (0, 1), with values within
/// the tolerance merged. Throws Error("radius cap exceeded") when the
/// witness radius outgrows the cap, and Error on |det| differing from 1 by
/// more than the tolerance.
std::size_t generic_value_count(const GenericLattice& m, const GenericOptions& options = {});

/// The witness radius min{|v|_max > 0 : |u| < 1/2} used to bound F.
double generic_global_bound(const GenericLattice& m, const GenericOptions& options = {});

/// A_{N+}(alpha, L) evaluated in doubles, including the N+^{1/d} scale.
GenericLattice float_rendering(const KroneckerInstance& inst, double tolerance = 1e-9);

/// LLL-reduced basis of the same lattice (delta = 0.99).
std::vector<std::vector<double>> lll_reduce(std::vector<std::vector<double>> basis);

double determinant(const std::vector<std::vector<double>>& m);

}  // namespace kgap
