#include <numeric>

#include "../oracles.hpp"
#include "doctest.h"
#include "kgap/sampling.hpp"

using kgap::KroneckerInstance;
using kgap::Lattice;
using kgap::Metric;
using kgap::Rational;
using kgap::RatVec;

namespace {

Rational q(long long p, long long r) { return Rational::reduce(p, r); }

std::vector<Rational> parse_all(std::initializer_list<const char*> xs)
{
    std::vector<Rational> out;
    for (const char* x : xs) {
        out.push_back(Rational::parse(x));
    }
    return out;
}

const KroneckerInstance witness2(RatVec{q(157, 500), q(-23, 200)}, 11);
const KroneckerInstance witness3(RatVec{q(-157, 10000), q(-742, 3125), q(-23, 400)}, 73);

}  // namespace

TEST_CASE("torus norm examples")
{
    const Lattice z2 = Lattice::standard(2);
    CHECK(kgap::torus_norm(RatVec{q(157, 500), q(-23, 200)}, z2, Metric::Max) == q(157, 500));
    CHECK(kgap::torus_norm(RatVec{q(3, 4), q(3, 4)}, z2, Metric::Manhattan) == q(1, 2));
    CHECK(kgap::torus_norm(RatVec{q(3, 4), q(3, 4)}, z2, Metric::Euclidean) == q(1, 8));
    CHECK(kgap::torus_norm(RatVec{0, 0}, z2, Metric::Max) == Rational(0));
}

TEST_CASE("two-dimensional witness")
{
    const auto s = kgap::gap_spectrum(witness2, Metric::Max);
    CHECK(s.g() == 5);
    CHECK(s.distinct == parse_all({"3/20", "87/500", "99/500", "31/100", "157/500"}));
    CHECK(kgap::delta(1, witness2, Metric::Max) == q(3, 20));
    CHECK(kgap::delta(2, witness2, Metric::Max) == q(87, 500));
    CHECK(kgap::delta(4, witness2, Metric::Max) == q(99, 500));
    CHECK(kgap::delta(5, witness2, Metric::Max) == q(31, 100));
    CHECK(kgap::delta(6, witness2, Metric::Max) == q(157, 500));
    CHECK(kgap::check_bound(s).report == "g = 5 (bound 5: OK)");
}

TEST_CASE("three-dimensional witness")
{
    const auto s = kgap::gap_spectrum(witness3, Metric::Max);
    CHECK(s.g() == 9);
    CHECK(s.distinct == parse_all({"7/50", "443/3125", "456/3125", "59/400", "13/80", "557/3125", "1993/10000",
                                   "43/200", "23/100"}));
    const std::vector<std::pair<int, const char*>> table{{1, "7/50"},     {2, "443/3125"},   {5, "456/3125"},
                                                         {6, "59/400"},   {18, "13/80"},     {19, "557/3125"},
                                                         {22, "1993/10000"}, {23, "43/200"}, {24, "23/100"}};
    for (const auto& [n, v] : table) {
        CHECK(s.deltas[static_cast<std::size_t>(n - 1)] == Rational::parse(v));
        CHECK(kgap::delta(n, witness3, Metric::Max) == Rational::parse(v));
    }
}

TEST_CASE("degenerate instances")
{
    CHECK(kgap::gap_spectrum(KroneckerInstance(RatVec{0, 0}, 7), Metric::Max).g() == 1);
    CHECK(kgap::gap_spectrum(KroneckerInstance(RatVec{0, 0}, 7), Metric::Max).deltas[0] == Rational(1));
    CHECK(kgap::delta(1, KroneckerInstance(RatVec{q(1, 3)}, 1), Metric::Max) == Rational(1));
    CHECK_THROWS_AS(KroneckerInstance(RatVec{q(1, 3)}, 0), kgap::Error);
    CHECK_THROWS_AS(KroneckerInstance(RatVec{q(1, 3)}, Lattice::standard(2), 3), kgap::Error);
}

TEST_CASE("spectra match the definition on random instances")
{
    kgap::sampling::Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
        const Lattice l = i % 2 == 0 ? Lattice::standard(d) : kgap::sampling::unimodular_lattice(rng, d);
        const KroneckerInstance inst(kgap::sampling::rational_vector(rng, d, 40), l, kgap::sampling::uniform(rng, 1, 10));
        for (Metric m : {Metric::Max, Metric::Euclidean, Metric::Manhattan}) {
            CAPTURE(i);
            const auto s = kgap::gap_spectrum(inst, m);
            const auto expect = oracle::deltas(inst, m);
            CHECK(s.deltas == expect);
            CHECK(s.g() == oracle::distinct_count(expect));
            CHECK(std::is_sorted(s.distinct.begin(), s.distinct.end()));
            const std::int64_t n = kgap::sampling::uniform(rng, 1, inst.N);
            CHECK(kgap::delta(n, inst, m) == expect[static_cast<std::size_t>(n - 1)]);
        }
    }
}

TEST_CASE("invariants: positivity, reflection, translation, signed permutation")
{
    kgap::sampling::Rng rng(32);
    for (int i = 0; i < 150; ++i) {
        const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
        const Lattice l = i % 3 == 2 ? kgap::sampling::unimodular_lattice(rng, d) : Lattice::standard(d);
        const RatVec alpha = kgap::sampling::rational_vector(rng, d, 200);
        const std::int64_t N = kgap::sampling::uniform(rng, 1, 60);
        const KroneckerInstance inst(alpha, l, N);
        for (Metric m : {Metric::Max, Metric::Euclidean, Metric::Manhattan}) {
            const auto s = kgap::gap_spectrum(inst, m);
            for (std::size_t n = 0; n < s.deltas.size(); ++n) {
                CHECK(s.deltas[n] > Rational(0));
                CHECK(s.deltas[n] == s.deltas[s.deltas.size() - 1 - n]);
            }
            RatVec c(d);
            for (std::size_t j = 0; j < d; ++j) {
                c[j] = Rational(kgap::sampling::uniform(rng, -4, 4));
            }
            CHECK(kgap::gap_spectrum(KroneckerInstance(alpha + c * l.basis(), l, N), m).deltas == s.deltas);
            CHECK(kgap::gap_spectrum(KroneckerInstance(-alpha, l, N), m).deltas == s.deltas);
        }
        if (l.is_standard()) {
            std::vector<std::size_t> perm(d);
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            std::shuffle(perm.begin(), perm.end(), rng);
            RatVec p(d);
            for (std::size_t j = 0; j < d; ++j) {
                p[j] = kgap::sampling::uniform(rng, 0, 1) != 0 ? -alpha[perm[j]] : alpha[perm[j]];
            }
            for (Metric m : {Metric::Max, Metric::Euclidean, Metric::Manhattan}) {
                CHECK(kgap::gap_spectrum(KroneckerInstance(p, N), m).deltas ==
                      kgap::gap_spectrum(inst, m).deltas);
            }
        }
    }
}

TEST_CASE("one-dimensional grid never exceeds three gaps")
{
    std::size_t max_g = 0;
    for (long long qd = 1; qd <= 50; ++qd) {
        for (long long p = 0; p < qd; ++p) {
            if (std::gcd(p, qd) != 1) {
                continue;
            }
            for (std::int64_t N = 1; N <= 100; N += 7) {
                const auto s = kgap::gap_spectrum(KroneckerInstance(RatVec{q(p, qd)}, N), Metric::Max);
                max_g = std::max(max_g, s.g());
                CHECK(s.g() <= 3);
            }
        }
    }
    CHECK(max_g == 3);
}

TEST_CASE("manhattan metric in the plane through the max-metric map")
{
    CHECK(kgap::manhattan_map() == kgap::RatMat{{1, -1}, {1, 1}});
    CHECK(kgap::gap_spectrum(witness2, Metric::Manhattan).g() == kgap::manhattan_via_map(witness2).g());
    kgap::sampling::Rng rng(33);
    for (int i = 0; i < 200; ++i) {
        const Lattice l = i % 4 == 3 ? kgap::sampling::unimodular_lattice(rng, 2) : Lattice::standard(2);
        const KroneckerInstance inst(kgap::sampling::rational_vector(rng, 2, 300), l,
                                     kgap::sampling::uniform(rng, 1, 80));
        const auto direct = kgap::gap_spectrum(inst, Metric::Manhattan);
        const auto mapped = kgap::manhattan_via_map(inst);
        CHECK(direct.deltas == mapped.deltas);
        CHECK(direct.g() <= 5);
    }
    CHECK_THROWS_WITH_AS(kgap::manhattan_via_map(witness3), "reduction defined for d=2 only", kgap::Error);
}

TEST_CASE("bounds and reports")
{
    CHECK(kgap::gap_bound(Metric::Max, 1) == 3);
    CHECK(kgap::gap_bound(Metric::Max, 3) == 9);
    CHECK(kgap::gap_bound(Metric::Max, 4) == 17);
    CHECK(kgap::gap_bound(Metric::Euclidean, 2) == 5);
    CHECK(kgap::gap_bound(Metric::Manhattan, 2) == 5);
    CHECK_FALSE(kgap::gap_bound(Metric::Euclidean, 3).has_value());
    const auto e3 = kgap::check_bound(kgap::gap_spectrum(witness3, Metric::Euclidean));
    CHECK(e3.ok);
    CHECK(e3.report.find("no bound asserted") != std::string::npos);
}
