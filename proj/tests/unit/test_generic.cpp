#include <cmath>

#include "doctest.h"
#include "kgap/generic_lattice.hpp"
#include "kgap/sampling.hpp"
#include "kgap/slab.hpp"

using kgap::GenericLattice;
using kgap::Rational;
using kgap::RatVec;

namespace {

Rational q(long long p, long long r) { return Rational::reduce(p, r); }

std::vector<std::vector<double>> multiply(const std::vector<std::vector<double>>& a,
                                          const std::vector<std::vector<double>>& b)
{
    const std::size_t n = a.size();
    std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("identity lattice has a single value")
{
    for (std::size_t n = 2; n <= 4; ++n) {
        GenericLattice m;
        m.basis.assign(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            m.basis[i][i] = 1.0;
        }
        CHECK(kgap::generic_value_count(m) == 1);
    }
}

TEST_CASE("float renderings of the witnesses")
{
    const kgap::KroneckerInstance w2(RatVec{q(157, 500), q(-23, 200)}, 11);
    const GenericLattice m2 = kgap::float_rendering(w2);
    CHECK(m2.dim() == 3);
    CHECK(kgap::determinant(m2.basis) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kgap::generic_value_count(m2) == 5);

    const kgap::KroneckerInstance w3(RatVec{q(-157, 10000), q(-742, 3125), q(-23, 400)}, 73);
    CHECK(kgap::generic_value_count(kgap::float_rendering(w3)) == 9);
}

TEST_CASE("determinant is checked")
{
    GenericLattice m{{{2.0, 0.0}, {0.0, 1.0}}};
    CHECK_THROWS_AS(kgap::generic_value_count(m), kgap::Error);
}

TEST_CASE("LLL keeps the lattice and the determinant")
{
    const std::vector<std::vector<double>> b{{1.0, 0.0, 0.0}, {7.0, 1.0, 0.0}, {3.0, 11.0, 1.0}};
    const auto r = kgap::lll_reduce(b);
    CHECK(std::abs(kgap::determinant(r)) == doctest::Approx(1.0));
    for (const auto& row : r) {
        double len = 0;
        for (double x : row) {
            len += x * x;
        }
        CHECK(len < 4.0);
    }
}

TEST_CASE("random SL(3) lattices stay within five values")
{
    kgap::sampling::Rng rng(61);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::uniform_real_distribution<double> s(0.5, 2.0);
    for (int i = 0; i < 40; ++i) {
        const double a = s(rng);
        const double b = s(rng);
        std::vector<std::vector<double>> diag{{a, 0, 0}, {0, b, 0}, {0, 0, 1.0 / (a * b)}};
        std::vector<std::vector<double>> lower{{1, 0, 0}, {u(rng), 1, 0}, {u(rng), u(rng), 1}};
        std::vector<std::vector<double>> upper{{1, u(rng), u(rng)}, {0, 1, u(rng)}, {0, 0, 1}};
        GenericLattice m{multiply(multiply(lower, diag), upper)};
        const std::size_t G = kgap::generic_value_count(m);
        CHECK(G >= 1);
        CHECK(G <= 5);
    }
}

TEST_CASE("float path agrees with the exact candidate count")
{
    kgap::sampling::Rng rng(62);
    int compared = 0;
    for (int i = 0; i < 60; ++i) {
        const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
        const kgap::KroneckerInstance inst(kgap::sampling::rational_vector(rng, d, 300),
                                           kgap::sampling::uniform(rng, 2, 60));
        const auto cands = kgap::candidate_set(inst);
        bool separated = true;
        for (std::size_t j = 1; j < cands.K(); ++j) {
            separated = separated && (cands.points[j].vnorm - cands.points[j - 1].vnorm).to_double() > 1e-6;
        }
        if (!separated) {
            continue;
        }
        ++compared;
        CHECK(kgap::generic_value_count(kgap::float_rendering(inst)) == cands.K());
    }
    CHECK(compared > 30);
}
