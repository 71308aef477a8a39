#include <algorithm>
#include <numeric>
#include <ostream>

#include "kgap/cli.hpp"
#include "kgap/fast_spectrum.hpp"
#include "kgap/sampling.hpp"
#include "kgap/slab.hpp"

namespace kgap::cli {

namespace {

struct Witness {
    const char* name;
    std::vector<const char*> alpha;
    std::int64_t N;
    std::vector<std::pair<std::int64_t, const char*>> indexed;
};

const std::vector<Witness>& witnesses()
{
    static const std::vector<Witness> w{
        {"d=2", {"157/500", "-23/200"}, 11,
         {{1, "3/20"}, {2, "87/500"}, {4, "99/500"}, {5, "31/100"}, {6, "157/500"}}},
        {"d=3", {"-157/10000", "-742/3125", "-23/400"}, 73,
         {{1, "7/50"}, {2, "443/3125"}, {5, "456/3125"}, {6, "59/400"}, {18, "13/80"}, {19, "557/3125"},
          {22, "1993/10000"}, {23, "43/200"}, {24, "23/100"}}},
    };
    return w;
}

class Tally {
public:
    explicit Tally(std::ostream& out) : out_(out) {}

    void check(bool ok, const std::string& what)
    {
        out_ << (ok ? "PASS " : "FAIL ") << what << '\n';
        all_ok_ = all_ok_ && ok;
    }

    bool ok() const { return all_ok_; }

private:
    std::ostream& out_;
    bool all_ok_ = true;
};

bool reflection_symmetric(const GapSpectrum& s)
{
    const auto n = s.deltas.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (s.deltas[i] != s.deltas[n - 1 - i]) {
            return false;
        }
    }
    return true;
}

bool all_positive(const GapSpectrum& s)
{
    return std::all_of(s.deltas.begin(), s.deltas.end(), [](const Rational& x) { return x.sign() > 0; });
}

}  // namespace

bool verify_witnesses(std::ostream& out)
{
    Tally t(out);
    for (const auto& w : witnesses()) {
        std::vector<Rational> a;
        for (const char* s : w.alpha) {
            a.push_back(Rational::parse(s));
        }
        const KroneckerInstance inst(RatVec(a), w.N);
        const GapSpectrum s = gap_spectrum(inst, Metric::Max);

        out << w.name << ": " << describe(inst) << '\n' << "  distinct:";
        for (const auto& x : s.distinct) {
            out << ' ' << x;
        }
        out << '\n';

        std::vector<Rational> expected;
        for (const auto& [n, value] : w.indexed) {
            const Rational v = Rational::parse(value);
            expected.push_back(v);
            t.check(s.deltas[static_cast<std::size_t>(n - 1)] == v,
                    std::string(w.name) + " delta_" + std::to_string(n) + " = " + value);
        }
        std::sort(expected.begin(), expected.end());
        t.check(s.distinct == expected, std::string(w.name) + " distinct set");
        const auto bound = *gap_bound(Metric::Max, inst.dim());
        t.check(static_cast<std::int64_t>(s.g()) == bound,
                std::string(w.name) + " g = " + std::to_string(s.g()) + " attains " + std::to_string(bound));

        const SlabCounts c = gap_count_via_slab(inst);
        t.check(c.g_slab == s.g() && c.G >= c.g_slab && static_cast<std::int64_t>(c.G) <= bound,
                std::string(w.name) + " slab g = " + std::to_string(c.g_slab) + ", G = " + std::to_string(c.G));
    }
    return t.ok();
}

bool verify_properties(std::uint64_t seed, std::size_t count, std::ostream& out)
{
    Tally t(out);
    sampling::Rng rng(seed);
    for (std::size_t d = 1; d <= 3; ++d) {
        const std::string tag = "d=" + std::to_string(d) + " ";
        bool positive = true;
        bool reflection = true;
        bool translation = true;
        bool permutation = true;
        bool bound = true;
        bool identity = true;
        bool sandwich = true;
        bool orthants = true;
        bool fast = true;
        bool manhattan = true;
        const auto cap = *gap_bound(Metric::Max, d);

        for (std::size_t i = 0; i < count; ++i) {
            const bool general = i % 4 == 3;
            const Lattice lattice = general ? sampling::unimodular_lattice(rng, d) : Lattice::standard(d);
            const RatVec alpha = sampling::rational_vector(rng, d, 60);
            const std::int64_t N = sampling::uniform(rng, 1, 40);
            const KroneckerInstance inst(alpha, lattice, N);

            GapSpectrum max_spectrum = gap_spectrum(inst, Metric::Max);
            for (Metric m : {Metric::Max, Metric::Euclidean, Metric::Manhattan}) {
                const GapSpectrum s = m == Metric::Max ? max_spectrum : gap_spectrum(inst, m);
                positive = positive && all_positive(s);
                reflection = reflection && reflection_symmetric(s);
            }
            bound = bound && static_cast<std::int64_t>(max_spectrum.g()) <= cap;

            // alpha + ell for a lattice vector ell gives the same sequence.
            RatVec shift(d);
            for (std::size_t j = 0; j < d; ++j) {
                shift[j] = Rational(sampling::uniform(rng, -3, 3));
            }
            const KroneckerInstance moved(alpha + shift * lattice.basis(), lattice, N);
            translation = translation && gap_spectrum(moved, Metric::Max).deltas == max_spectrum.deltas;

            if (!general) {
                std::vector<std::size_t> perm(d);
                for (std::size_t j = 0; j < d; ++j) {
                    perm[j] = j;
                }
                std::shuffle(perm.begin(), perm.end(), rng);
                RatVec permuted(d);
                for (std::size_t j = 0; j < d; ++j) {
                    permuted[j] = sampling::uniform(rng, 0, 1) == 0 ? alpha[perm[j]] : -alpha[perm[j]];
                }
                permutation = permutation &&
                              gap_spectrum(KroneckerInstance(permuted, N), Metric::Max).deltas == max_spectrum.deltas;

                for (Metric m : {Metric::Max, Metric::Manhattan}) {
                    const auto f = fast_gap_spectrum(alpha, N, m);
                    if (!f) {
                        continue;
                    }
                    const GapSpectrum s = m == Metric::Max ? max_spectrum : gap_spectrum(inst, m);
                    for (std::int64_t n = 1; n <= N; ++n) {
                        fast = fast && f->delta(n) == s.deltas[static_cast<std::size_t>(n - 1)];
                    }
                }
            }

            if (d == 2) {
                const GapSpectrum direct = gap_spectrum(inst, Metric::Manhattan);
                const GapSpectrum mapped = manhattan_via_map(inst);
                manhattan = manhattan && direct.deltas == mapped.deltas && direct.g() <= 5;
            }

            const Slab slab(inst);
            const SlabCounts c = slab.counts();
            for (std::int64_t n = 1; n <= N; ++n) {
                identity = identity && slab.F(n) == max_spectrum.deltas[static_cast<std::size_t>(n - 1)];
            }
            identity = identity && c.g_slab == max_spectrum.g();
            sandwich = sandwich && c.g_slab <= c.G && static_cast<std::int64_t>(c.G) <= cap;

            const CandidateSet cands = slab.candidate_set();
            for (std::size_t a = 0; a + 1 < cands.K(); ++a) {
                for (std::size_t b = a + 1; b + 1 < cands.K(); ++b) {
                    if (share_closed_orthant(orthant_signature(cands.points[a]),
                                             orthant_signature(cands.points[b]))) {
                        orthants = false;
                    }
                }
            }
        }

        t.check(positive, tag + "every gap is positive");
        t.check(reflection, tag + "reflection symmetry, all metrics");
        t.check(translation, tag + "translation by a lattice vector");
        t.check(permutation, tag + "signed coordinate permutation");
        t.check(bound, tag + "g <= " + std::to_string(cap));
        t.check(identity, tag + "F(n / N+) equals the n-th gap");
        t.check(sandwich, tag + "g <= G <= " + std::to_string(cap));
        t.check(orthants, tag + "orthant exclusion among candidates");
        t.check(fast, tag + "integer fast path equals the exact path");
        if (d == 2) {
            t.check(manhattan, tag + "manhattan direct equals mapped, g <= 5");
        }
    }
    return t.ok();
}

bool verify_d1_exhaustive(std::ostream& out)
{
    Tally t(out);
    std::size_t max_g = 0;
    bool attained = false;
    for (std::int64_t q = 1; q <= 20; ++q) {
        for (std::int64_t p = 0; p < q; ++p) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            for (std::int64_t N = 1; N <= 50; ++N) {
                const KroneckerInstance inst(RatVec{Rational::reduce(p, q)}, N);
                const std::size_t g = gap_spectrum(inst, Metric::Max).g();
                max_g = std::max(max_g, g);
                attained = attained || g == 3;
            }
        }
    }
    out << "max g observed = " << max_g << '\n';
    t.check(max_g <= 3, "d=1 g <= 3 for q <= 20, N <= 50");
    t.check(attained, "d=1 g = 3 attained");
    return t.ok();
}

}  // namespace kgap::cli
