#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "kgap/linalg.hpp"

namespace kgap {

enum class Metric { Max, Euclidean, Manhattan };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view text);

/// The metric's value on v: max |v_i|, sum |v_i|, or the squared
/// Euclidean length. Euclidean values are never square-rooted.
Rational metric_value(const RatVec& v, Metric m);

/// Full-rank lattice {c * basis : c in Z^d} with rational basis rows.
class Lattice {
public:
    explicit Lattice(RatMat basis);
    /// The integer lattice Z^d.
    static Lattice standard(std::size_t dim);

    std::size_t dim() const { return basis_.rows(); }
    const RatMat& basis() const { return basis_; }
    const RatMat& basis_inverse() const { return inverse_; }
    bool unimodular() const { return unimodular_; }
    bool is_standard() const;

    /// Lattice image under x -> x * t for an invertible d x d matrix t.
    Lattice transformed(const RatMat& t) const;

    /// Calls visit(ell, dist) for every lattice point ell with
    /// metric_value(target - ell) <= radius. Points are enumerated
    /// depth-first over a triangular basis.
    void for_each_within(const RatVec& target, Metric metric, const Rational& radius,
                         const std::function<void(const RatVec& ell, const Rational& dist)>& visit) const;

    /// min over ell of metric_value(x - ell); zero when x is a lattice point.
    Rational distance_to(const RatVec& x, Metric metric) const;

    /// A lattice point attaining distance_to(x).
    RatVec closest_point(const RatVec& x, Metric metric) const;

    /// Length of the shortest nonzero lattice vector.
    Rational shortest_nonzero(Metric metric) const;

    bool contains(const RatVec& x) const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

private:
    RatMat basis_;
    RatMat inverse_;
    RatMat triangular_;
    bool unimodular_ = false;
    bool standard_ = false;

    RatVec rounded_point(const RatVec& x) const;
    Rational search(const RatVec& x, Metric metric, Rational bound, bool exclude_zero, RatVec* best) const;
};

}  // namespace kgap
