#include "kgap/slab.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace kgap {

namespace {

bool witness_before(const SlabPoint& a, const SlabPoint& b)
{
    const auto ak = a.k < 0 ? -a.k : a.k;
    const auto bk = b.k < 0 ? -b.k : b.k;
    if (ak != bk) {
        return ak < bk;
    }
    return a.v < b.v;
}

void collect_points(const KroneckerInstance& inst, std::int64_t k_limit, const Rational& radius,
                    std::vector<SlabPoint>& out)
{
    for (std::int64_t k = -k_limit; k <= k_limit; ++k) {
        const RatVec shift = inst.alpha * Rational(k);
        inst.lattice.for_each_within(-shift, Metric::Max, radius, [&](const RatVec& ell, const Rational& dist) {
            if (dist.is_zero()) {
                return;
            }
            out.push_back(SlabPoint{k, shift + ell, ell, dist});
        });
    }
}

// Rational upper bound on (2 / N+)^{1/d}; only used as a starting radius.
Rational minkowski_seed(const Rational& n_plus, std::size_t d)
{
    const double s = std::pow(2.0 / n_plus.to_double(), 1.0 / static_cast<double>(d));
    constexpr long scale = 1L << 20;
    const auto num = static_cast<long long>(std::ceil(s * static_cast<double>(scale))) + 1;
    return Rational::reduce(num, scale);
}

}  // namespace

SlabFactors build_A(const KroneckerInstance& inst)
{
    if (!inst.lattice.unimodular()) {
        throw Error("slab formulation requires a unimodular lattice (|det| = 1)");
    }
    return SlabFactors{inst.lattice.basis(), inst.alpha, Rational(inst.N) + Rational::reduce(1, 2)};
}

std::vector<SlabPoint> slab_points(const KroneckerInstance& inst, const Rational& radius)
{
    if (radius.sign() <= 0) {
        throw Error("slab radius must be positive");
    }
    std::vector<SlabPoint> points;
    collect_points(inst, inst.N, radius, points);
    // Already ordered by k; within one k order by v and drop duplicates.
    std::sort(points.begin(), points.end(), [](const SlabPoint& a, const SlabPoint& b) {
        return a.k != b.k ? a.k < b.k : a.v < b.v;
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const SlabPoint& a, const SlabPoint& b) { return a.k == b.k && a.v == b.v; }),
                 points.end());
    return points;
}

Rational global_bound(const KroneckerInstance& inst)
{
    const Rational n_plus = Rational(inst.N) + Rational::reduce(1, 2);
    // |k| < N+ / 2 holds exactly for |k| <= floor(N / 2).
    const std::int64_t k_limit = inst.N / 2;
    Rational radius = minkowski_seed(n_plus, inst.dim());
    for (;;) {
        std::vector<SlabPoint> found;
        collect_points(inst, k_limit, radius, found);
        if (!found.empty()) {
            Rational best = found.front().vnorm;
            for (const auto& p : found) {
                best = min(best, p.vnorm);
            }
            return best;
        }
        radius *= Rational(2);
    }
}

Slab::Slab(KroneckerInstance inst)
    : inst_(std::move(inst)), factors_(build_A(inst_)), radius_(global_bound(inst_)),
      points_(slab_points(inst_, radius_))
{
    for (const auto& p : points_) {
        auto [it, inserted] = best_by_k_.try_emplace(p.k, p.vnorm);
        if (!inserted && p.vnorm < it->second) {
            it->second = p.vnorm;
        }
    }
}

Slab::Window Slab::window_at(const Rational& t) const
{
    const Rational& n_plus = factors_.N_plus;
    // -t < k / N+ < 1 - t
    const Rational lo = -t * n_plus;
    const Rational hi = n_plus - t * n_plus;
    const std::int64_t k_lo = std::max<std::int64_t>(lo.floor().get_si() + 1, -inst_.N);
    const std::int64_t k_hi = std::min<std::int64_t>(hi.ceil().get_si() - 1, inst_.N);
    return {k_lo, k_hi};
}

Rational Slab::min_over(Window w) const
{
    std::optional<Rational> best;
    for (auto it = best_by_k_.lower_bound(w.lo); it != best_by_k_.end() && it->first <= w.hi; ++it) {
        if (!best || it->second < *best) {
            best = it->second;
        }
    }
    if (!best) {
        throw Error("no slab point admissible; enumeration radius too small");
    }
    return *best;
}

Rational Slab::F_at(const Rational& t) const
{
    if (t.sign() <= 0 || !(t < Rational(1))) {
        throw Error("t must lie in (0, 1)");
    }
    return min_over(window_at(t));
}

Rational Slab::F(std::int64_t n) const
{
    if (n < 1 || n > inst_.N) {
        throw Error("n = " + std::to_string(n) + " out of range [1, " + std::to_string(inst_.N) + "]");
    }
    return min_over(Window{1 - n, inst_.N - n});
}

std::vector<Rational> Slab::breakpoints() const
{
    std::vector<Rational> out;
    const Rational one(1);
    for (const auto& [k, norm] : best_by_k_) {
        const Rational u = Rational(k) / factors_.N_plus;
        for (const Rational& t : {-u, one - u}) {
            if (t.sign() > 0 && t < one) {
                out.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CandidateSet Slab::candidate_set() const
{
    // F is constant between consecutive breakpoints; sample every open
    // subinterval at its midpoint and every breakpoint itself.
    const auto cuts = breakpoints();
    std::vector<Rational> samples;
    Rational prev(0);
    for (const auto& b : cuts) {
        samples.push_back((prev + b) / Rational(2));
        samples.push_back(b);
        prev = b;
    }
    samples.push_back((prev + Rational(1)) / Rational(2));

    std::map<Rational, SlabPoint> witnesses;
    for (const auto& t : samples) {
        const Window w = window_at(t);
        const Rational value = min_over(w);
        auto first = std::lower_bound(points_.begin(), points_.end(), w.lo,
                                      [](const SlabPoint& p, std::int64_t k) { return p.k < k; });
        for (auto it = first; it != points_.end() && it->k <= w.hi; ++it) {
            if (it->vnorm != value) {
                continue;
            }
            auto [slot, inserted] = witnesses.try_emplace(value, *it);
            if (!inserted && witness_before(*it, slot->second)) {
                slot->second = *it;
            }
        }
    }

    CandidateSet set;
    for (auto& [value, point] : witnesses) {
        set.points.push_back(point);
    }
    return set;
}

SlabCounts Slab::counts() const
{
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(inst_.N));
    for (std::int64_t n = 1; n <= inst_.N; ++n) {
        values.push_back(F(n));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return SlabCounts{values.size(), candidate_set().K()};
}

Rational F_exact(const KroneckerInstance& inst, std::int64_t n)
{
    return Slab(inst).F(n);
}

CandidateSet candidate_set(const KroneckerInstance& inst)
{
    return Slab(inst).candidate_set();
}

SlabCounts gap_count_via_slab(const KroneckerInstance& inst)
{
    return Slab(inst).counts();
}

OrthantSignature orthant_signature(const SlabPoint& p)
{
    const int su = p.k > 0 ? 1 : (p.k < 0 ? -1 : 0);
    OrthantSignature s(p.v.dim());
    for (std::size_t j = 0; j < p.v.dim(); ++j) {
        s[j] = su * p.v[j].sign();
    }
    return s;
}

bool share_closed_orthant(const OrthantSignature& a, const OrthantSignature& b)
{
    if (a.size() != b.size()) {
        throw Error("signature dimension mismatch");
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] * b[j] < 0) {
            return false;
        }
    }
    return true;
}

std::string to_string(const OrthantSignature& s)
{
    std::string out;
    for (int c : s) {
        out += c > 0 ? '+' : (c < 0 ? '-' : '*');
    }
    return out;
}

}  // namespace kgap
