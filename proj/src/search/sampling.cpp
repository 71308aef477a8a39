#include "kgap/sampling.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

namespace kgap::sampling {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) {
        return static_cast<std::int64_t>(rng());
    }
    const std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = top - top % span;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

Rational rational(Rng& rng, std::int64_t den_cap)
{
    const std::int64_t q = uniform(rng, 1, den_cap);
    const std::int64_t p = uniform(rng, -(q - 1), q - 1);
    return Rational::reduce(p, q);
}

RatVec rational_vector(Rng& rng, std::size_t dim, std::int64_t den_cap)
{
    std::vector<Rational> v;
    v.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v.push_back(rational(rng, den_cap));
    }
    return RatVec(std::move(v));
}

RatMat unimodular_integer_matrix(Rng& rng, std::size_t dim, int steps)
{
    RatMat m = RatMat::identity(dim);
    if (dim < 2) {
        return m;
    }
    for (int s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(dim) - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(dim) - 2));
        if (j >= i) {
            ++j;
        }
        const Rational f(uniform(rng, -2, 2));
        for (std::size_t c = 0; c < dim; ++c) {
            m(i, c) += f * m(j, c);
        }
    }
    return m;
}

Lattice unimodular_lattice(Rng& rng, std::size_t dim)
{
    RatMat m = RatMat::identity(dim);
    // signed permutation
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = dim; i > 1; --i) {
        std::swap(perm[i - 1], perm[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1))]);
    }
    RatMat p(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        p(i, perm[i]) = uniform(rng, 0, 1) == 0 ? 1 : -1;
    }
    m = m * p;
    if (dim >= 2) {
        // diag(a, 1/a) on two coordinates
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(dim) - 1));
        const std::size_t j = (i + 1) % dim;
        const Rational a = Rational::reduce(uniform(rng, 1, 4), uniform(rng, 1, 4));
        RatMat diag = RatMat::identity(dim);
        diag(i, i) = a;
        diag(j, j) = Rational(1) / a;
        m = m * diag;
        for (int s = 0; s < 3; ++s) {
            const auto r = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(dim) - 1));
            auto c = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(dim) - 2));
            if (c >= r) {
                ++c;
            }
            RatMat shear = RatMat::identity(dim);
            shear(r, c) = Rational::reduce(uniform(rng, -3, 3), uniform(rng, 1, 4));
            m = shear * m;
        }
    }
    return Lattice(std::move(m));
}

}  // namespace kgap::sampling
