#include "kgap/lattice.hpp"

#include <optional>

namespace kgap {

namespace {

Rational coordinate_cost(const Rational& y, Metric m)
{
    return m == Metric::Euclidean ? y * y : abs(y);
}

Rational combine(const Rational& acc, const Rational& cost, Metric m)
{
    return m == Metric::Max ? max(acc, cost) : acc + cost;
}

// Depth-first enumeration over an upper-triangular basis T: coordinate j of
// c * T depends only on c_0..c_j, so every prefix of coefficients fixes a
// prefix of coordinates and its partial metric value.
class TriangularWalk {
public:
    using Visit = std::function<void(const std::vector<Integer>& coeffs, const RatVec& ell, const Rational& dist)>;

    TriangularWalk(const RatMat& tri, const RatVec& target, Metric metric, Rational& bound, Visit visit)
        : tri_(tri), target_(target), metric_(metric), bound_(bound), visit_(std::move(visit)),
          dim_(tri.rows()), coeffs_(dim_), partial_(dim_ + 1, RatVec(dim_))
    {
    }

    void run() { descend(0, Rational(0)); }

private:
    const RatMat& tri_;
    const RatVec& target_;
    Metric metric_;
    // Callers may lower the bound from inside visit().
    Rational& bound_;
    Visit visit_;
    std::size_t dim_;
    std::vector<Integer> coeffs_;
    // partial_[j] = sum_{i<j} c_i T_i, the lattice point built so far.
    std::vector<RatVec> partial_;

    // Returns false when the candidate exceeds the bound (caller stops that side).
    bool try_coefficient(std::size_t level, const Integer& c, const Rational& residual, const Rational& acc)
    {
        const Rational& pivot = tri_(level, level);
        const Rational y = residual - Rational(c) * pivot;
        const Rational next = combine(acc, coordinate_cost(y, metric_), metric_);
        if (bound_ < next) {
            return false;
        }
        coeffs_[level] = c;
        RatVec& p = partial_[level + 1];
        p = partial_[level];
        const Rational cr(c);
        for (std::size_t j = level; j < dim_; ++j) {
            p[j] += cr * tri_(level, j);
        }
        descend(level + 1, next);
        return true;
    }

    void descend(std::size_t level, const Rational& acc)
    {
        if (level == dim_) {
            const RatVec& ell = partial_[dim_];
            visit_(coeffs_, ell, acc);
            return;
        }
        const Rational residual = target_[level] - partial_[level][level];
        const Integer center = (residual / tri_(level, level)).round();
        for (Integer c = center;; ++c) {
            if (!try_coefficient(level, c, residual, acc)) {
                break;
            }
        }
        for (Integer c = center - 1;; --c) {
            if (!try_coefficient(level, c, residual, acc)) {
                break;
            }
        }
    }
};

}  // namespace

std::string_view to_string(Metric m)
{
    switch (m) {
        case Metric::Max:
            return "max";
        case Metric::Euclidean:
            return "euclidean";
        case Metric::Manhattan:
            return "manhattan";
    }
    return "max";
}

Metric parse_metric(std::string_view text)
{
    if (text == "max" || text == "MAX" || text == "linf") {
        return Metric::Max;
    }
    if (text == "euclidean" || text == "EUCLIDEAN" || text == "l2") {
        return Metric::Euclidean;
    }
    if (text == "manhattan" || text == "MANHATTAN" || text == "l1") {
        return Metric::Manhattan;
    }
    throw Error("unknown metric '" + std::string(text) + "'");
}

Rational metric_value(const RatVec& v, Metric m)
{
    Rational acc(0);
    for (const auto& x : v) {
        acc = combine(acc, coordinate_cost(x, m), m);
    }
    return acc;
}

Lattice::Lattice(RatMat basis) : basis_(std::move(basis))
{
    if (!basis_.is_square() || basis_.rows() == 0) {
        throw Error("lattice basis must be a nonempty square matrix");
    }
    inverse_ = inverse(basis_);
    triangular_ = triangular_basis(basis_);
    unimodular_ = abs(det(basis_)) == Rational(1);
    standard_ = basis_ == RatMat::identity(basis_.rows());
}

Lattice Lattice::standard(std::size_t dim)
{
    return Lattice(RatMat::identity(dim));
}

bool Lattice::is_standard() const
{
    return standard_;
}

Lattice Lattice::transformed(const RatMat& t) const
{
    return Lattice(basis_ * t);
}

bool Lattice::contains(const RatVec& x) const
{
    if (x.dim() != dim()) {
        throw Error("dimension mismatch: point has dim " + std::to_string(x.dim()) + ", lattice has dim " +
                    std::to_string(dim()));
    }
    for (const auto& c : x * inverse_) {
        if (!c.is_integer()) {
            return false;
        }
    }
    return true;
}

RatVec Lattice::rounded_point(const RatVec& x) const
{
    RatVec coeffs = x * inverse_;
    for (std::size_t i = 0; i < coeffs.dim(); ++i) {
        coeffs[i] = Rational(coeffs[i].round());
    }
    return coeffs * basis_;
}

void Lattice::for_each_within(const RatVec& target, Metric metric, const Rational& radius,
                              const std::function<void(const RatVec&, const Rational&)>& visit) const
{
    if (target.dim() != dim()) {
        throw Error("dimension mismatch: target has dim " + std::to_string(target.dim()) + ", lattice has dim " +
                    std::to_string(dim()));
    }
    if (radius.sign() < 0) {
        return;
    }
    Rational bound = radius;
    TriangularWalk walk(triangular_, target, metric, bound,
                        [&](const std::vector<Integer>&, const RatVec& ell, const Rational& dist) { visit(ell, dist); });
    walk.run();
}

Rational Lattice::search(const RatVec& x, Metric metric, Rational bound, bool exclude_zero, RatVec* best) const
{
    std::optional<Rational> found;
    TriangularWalk walk(triangular_, x, metric, bound,
                        [&](const std::vector<Integer>& coeffs, const RatVec& ell, const Rational& dist) {
                            if (exclude_zero) {
                                bool zero = true;
                                for (const auto& c : coeffs) {
                                    if (c != 0) {
                                        zero = false;
                                        break;
                                    }
                                }
                                if (zero) {
                                    return;
                                }
                            }
                            if (!found || dist < *found) {
                                found = dist;
                                bound = dist;
                                if (best != nullptr) {
                                    *best = ell;
                                }
                            }
                        });
    walk.run();
    if (!found) {
        throw Error("lattice search found no point within the seeded bound");
    }
    return *found;
}

Rational Lattice::distance_to(const RatVec& x, Metric metric) const
{
    if (x.dim() != dim()) {
        throw Error("dimension mismatch: point has dim " + std::to_string(x.dim()) + ", lattice has dim " +
                    std::to_string(dim()));
    }
    if (standard_) {
        // All three metrics separate over coordinates, so Z^d rounds each one.
        Rational acc(0);
        for (const auto& xi : x) {
            const Rational f = xi - Rational(xi.floor());
            acc = combine(acc, coordinate_cost(min(f, Rational(1) - f), metric), metric);
        }
        return acc;
    }
    const Rational seed = metric_value(x - rounded_point(x), metric);
    return search(x, metric, seed, false, nullptr);
}

RatVec Lattice::closest_point(const RatVec& x, Metric metric) const
{
    if (x.dim() != dim()) {
        throw Error("dimension mismatch");
    }
    const RatVec start = rounded_point(x);
    RatVec best = start;
    search(x, metric, metric_value(x - start, metric), false, &best);
    return best;
}

Rational Lattice::shortest_nonzero(Metric metric) const
{
    Rational seed = metric_value(basis_.row(0), metric);
    for (std::size_t r = 1; r < dim(); ++r) {
        seed = min(seed, metric_value(basis_.row(r), metric));
    }
    return search(RatVec(dim()), metric, seed, true, nullptr);
}

}  // namespace kgap
