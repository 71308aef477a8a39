#include "../oracles.hpp"
#include "doctest.h"
#include "kgap/sampling.hpp"
#include "kgap/slab.hpp"

using kgap::KroneckerInstance;
using kgap::Lattice;
using kgap::Metric;
using kgap::Rational;
using kgap::RatVec;

namespace {

Rational q(long long p, long long r) { return Rational::reduce(p, r); }

const KroneckerInstance witness2(RatVec{q(157, 500), q(-23, 200)}, 11);
const KroneckerInstance witness3(RatVec{q(-157, 10000), q(-742, 3125), q(-23, 400)}, 73);

KroneckerInstance random_instance(kgap::sampling::Rng& rng, int i, std::int64_t max_n)
{
    const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
    const Lattice l = i % 3 == 1 ? kgap::sampling::unimodular_lattice(rng, d) : Lattice::standard(d);
    return KroneckerInstance(kgap::sampling::rational_vector(rng, d, 60), l, kgap::sampling::uniform(rng, 1, max_n));
}

}  // namespace

TEST_CASE("factors of A")
{
    const auto f2 = kgap::build_A(witness2);
    CHECK(f2.N_plus == q(23, 2));
    CHECK(f2.M0 == kgap::RatMat::identity(2));
    CHECK(f2.alpha == witness2.alpha);
    CHECK(kgap::build_A(witness3).N_plus == q(147, 2));
    const KroneckerInstance bad(RatVec{q(1, 3)}, Lattice(kgap::RatMat{{2}}), 4);
    CHECK_THROWS_AS(kgap::build_A(bad), kgap::Error);
}

TEST_CASE("F at the sequence points of the witnesses")
{
    CHECK(kgap::F_exact(witness2, 1) == q(3, 20));
    CHECK(kgap::F_exact(witness2, 6) == q(157, 500));
    CHECK(kgap::F_exact(witness3, 6) == q(59, 400));
    CHECK(kgap::F_exact(witness3, 24) == q(23, 100));
}

TEST_CASE("global bound is the best witness with |k| <= N/2")
{
    CHECK(kgap::global_bound(witness2) == q(157, 500));
    kgap::sampling::Rng rng(51);
    for (int i = 0; i < 80; ++i) {
        const auto inst = random_instance(rng, i, 30);
        std::optional<Rational> expect;
        for (std::int64_t k = -inst.N / 2; k <= inst.N / 2; ++k) {
            const Rational v = oracle::box_norm(inst.alpha * Rational(k), inst.lattice, Metric::Max, true);
            if (!expect || v < *expect) {
                expect = v;
            }
        }
        CHECK(kgap::global_bound(inst) == *expect);
    }
}

TEST_CASE("slab points")
{
    const auto pts = kgap::slab_points(witness2, q(157, 500));
    const auto hit = std::find_if(pts.begin(), pts.end(), [](const kgap::SlabPoint& p) { return p.k == 10; });
    REQUIRE(hit != pts.end());
    CHECK(hit->vnorm == q(3, 20));
    CHECK(hit->v == witness2.alpha * Rational(10) + hit->ell);

    // alpha = 0: v ranges over the nonzero lattice vectors with |v| <= 1, for each |k| <= N.
    const auto zero = kgap::slab_points(KroneckerInstance(RatVec{0, 0}, 3), Rational(1));
    CHECK(zero.size() == 7 * 8);
    CHECK_THROWS_AS(kgap::slab_points(witness2, Rational(0)), kgap::Error);

    kgap::sampling::Rng rng(52);
    for (int i = 0; i < 40; ++i) {
        const auto inst = random_instance(rng, i, 12);
        const Rational radius = q(kgap::sampling::uniform(rng, 1, 8), 10);
        std::size_t expect = 0;
        for (std::int64_t k = -inst.N; k <= inst.N; ++k) {
            inst.lattice.for_each_within(inst.alpha * Rational(k), Metric::Max, radius,
                                         [&](const RatVec&, const Rational& dist) { expect += dist.is_zero() ? 0 : 1; });
        }
        const auto got = kgap::slab_points(inst, radius);
        CHECK(got.size() == expect);
        for (const auto& p : got) {
            CHECK(p.vnorm == oracle::value(p.v, Metric::Max));
            CHECK(p.vnorm > Rational(0));
            CHECK(p.vnorm <= radius);
            CHECK(inst.lattice.contains(p.ell));
        }
    }
}

TEST_CASE("candidate sets of the witnesses")
{
    const auto c2 = kgap::candidate_set(witness2);
    CHECK(c2.K() == 5);
    const auto c3 = kgap::candidate_set(witness3);
    CHECK(c3.K() == 9);
    for (const auto* c : {&c2, &c3}) {
        for (std::size_t i = 1; i < c->K(); ++i) {
            CHECK(c->points[i - 1].vnorm < c->points[i].vnorm);
        }
    }
    const auto counts = kgap::gap_count_via_slab(witness2);
    CHECK(counts.g_slab == 5);
    CHECK(counts.G == 5);
}

TEST_CASE("orthant signatures")
{
    kgap::SlabPoint p{3, RatVec{q(1, 5), q(-1, 7), 0}, RatVec{}, q(1, 5)};
    CHECK(kgap::orthant_signature(p) == kgap::OrthantSignature{1, -1, 0});
    CHECK(kgap::to_string(kgap::orthant_signature(p)) == "+-*");
    p.k = -3;
    CHECK(kgap::orthant_signature(p) == kgap::OrthantSignature{-1, 1, 0});
    p.k = 0;
    CHECK(kgap::to_string(kgap::orthant_signature(p)) == "***");
    CHECK(kgap::share_closed_orthant({1, 0}, {1, -1}));
    CHECK(kgap::share_closed_orthant({0, 0}, {-1, -1}));
    CHECK_FALSE(kgap::share_closed_orthant({1, 1}, {1, -1}));
}

TEST_CASE("F is the gap sequence and G matches a grid oracle")
{
    kgap::sampling::Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        CAPTURE(i);
        const auto inst = random_instance(rng, i, 25);
        const kgap::Slab slab(inst);
        const auto expect = oracle::deltas(inst, Metric::Max);
        for (std::int64_t n = 1; n <= inst.N; ++n) {
            CHECK(slab.F(n) == expect[static_cast<std::size_t>(n - 1)]);
        }
        const auto values = oracle::F_values(inst);
        const auto counts = slab.counts();
        CHECK(counts.G == values.size());
        CHECK(counts.g_slab == oracle::distinct_count(expect));
        CHECK(counts.g_slab <= counts.G);
        CHECK(static_cast<std::int64_t>(counts.G) <= *kgap::gap_bound(Metric::Max, inst.dim()));

        const auto cands = slab.candidate_set();
        CHECK(cands.K() == counts.G);
        std::size_t j = 0;
        for (const auto& v : values) {
            CHECK(cands.points[j++].vnorm == v);
        }
        for (std::size_t a = 0; a + 1 < cands.K(); ++a) {
            for (std::size_t b = a + 1; b + 1 < cands.K(); ++b) {
                CHECK_FALSE(kgap::share_closed_orthant(kgap::orthant_signature(cands.points[a]),
                                                       kgap::orthant_signature(cands.points[b])));
            }
        }
    }
}

TEST_CASE("F is constant between consecutive breakpoints")
{
    kgap::sampling::Rng rng(54);
    for (int i = 0; i < 30; ++i) {
        const auto inst = random_instance(rng, i, 20);
        const kgap::Slab slab(inst);
        auto bps = slab.breakpoints();
        bps.insert(bps.begin(), Rational(0));
        bps.push_back(Rational(1));
        for (std::size_t j = 0; j + 1 < bps.size(); ++j) {
            const Rational w = bps[j + 1] - bps[j];
            const Rational a = slab.F_at(bps[j] + w * q(1, 7));
            CHECK(slab.F_at(bps[j] + w * q(1, 2)) == a);
            CHECK(slab.F_at(bps[j] + w * q(6, 7)) == a);
        }
    }
}
