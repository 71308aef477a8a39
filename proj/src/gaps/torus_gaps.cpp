#include "kgap/torus_gaps.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace kgap {

namespace {

// Smallest positive |k alpha + ell| over ell in L: the torus norm, or the
// shortest lattice vector when k alpha is itself a lattice point.
Rational positive_norm(const Rational& norm, const Rational& shortest)
{
    return norm.is_zero() ? shortest : norm;
}

std::vector<Rational> sorted_distinct(std::vector<Rational> values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

}  // namespace

KroneckerInstance::KroneckerInstance(RatVec alpha_, Lattice lattice_, std::int64_t n)
    : alpha(std::move(alpha_)), lattice(std::move(lattice_)), N(n)
{
    if (alpha.dim() == 0) {
        throw Error("alpha must have dimension >= 1");
    }
    if (alpha.dim() != lattice.dim()) {
        throw Error("dimension mismatch: alpha has dim " + std::to_string(alpha.dim()) + ", lattice has dim " +
                    std::to_string(lattice.dim()));
    }
    if (N < 1) {
        throw Error("N must be >= 1");
    }
}

KroneckerInstance::KroneckerInstance(RatVec alpha_, std::int64_t n)
    : KroneckerInstance(alpha_, Lattice::standard(alpha_.dim() == 0 ? 1 : alpha_.dim()), n)
{
}

Rational torus_norm(const RatVec& x, const Lattice& lattice, Metric metric)
{
    return lattice.distance_to(x, metric);
}

Rational delta(std::int64_t n, const KroneckerInstance& inst, Metric metric)
{
    if (n < 1 || n > inst.N) {
        throw Error("n = " + std::to_string(n) + " out of range [1, " + std::to_string(inst.N) + "]");
    }
    const Rational shortest = inst.lattice.shortest_nonzero(metric);
    std::optional<Rational> best;
    for (std::int64_t k = 1 - n; k <= inst.N - n; ++k) {
        const Rational value = positive_norm(torus_norm(inst.alpha * Rational(k), inst.lattice, metric), shortest);
        if (!best || value < *best) {
            best = value;
        }
    }
    return *best;
}

GapSpectrum gap_spectrum(const KroneckerInstance& inst, Metric metric)
{
    const std::int64_t N = inst.N;
    const Rational shortest = inst.lattice.shortest_nonzero(metric);

    // norms[j] holds the positive norm for k = j - (N - 1).
    std::vector<Rational> norms(static_cast<std::size_t>(2 * N - 1));
    RatVec x = inst.alpha * Rational(1 - N);
    for (auto& norm : norms) {
        norm = positive_norm(torus_norm(x, inst.lattice, metric), shortest);
        x += inst.alpha;
    }

    // Window of n is j in [N - n, 2N - 1 - n]; sweep n = N..1 so it slides right.
    GapSpectrum spectrum{inst, metric, std::vector<Rational>(static_cast<std::size_t>(N)), {}};
    std::deque<std::size_t> window;
    std::size_t next = 0;
    for (std::int64_t n = N; n >= 1; --n) {
        const auto lo = static_cast<std::size_t>(N - n);
        const auto hi = static_cast<std::size_t>(2 * N - 1 - n);
        for (; next <= hi; ++next) {
            while (!window.empty() && !(norms[window.back()] < norms[next])) {
                window.pop_back();
            }
            window.push_back(next);
        }
        while (window.front() < lo) {
            window.pop_front();
        }
        spectrum.deltas[static_cast<std::size_t>(n - 1)] = norms[window.front()];
    }
    spectrum.distinct = sorted_distinct(spectrum.deltas);
    return spectrum;
}

RatMat manhattan_map()
{
    // Q^T, so that x * Q^T = (x1 + x2, x2 - x1) = Q x.
    return RatMat{{1, -1}, {1, 1}};
}

GapSpectrum manhattan_via_map(const KroneckerInstance& inst)
{
    if (inst.dim() != 2) {
        throw Error("reduction defined for d=2 only");
    }
    const RatMat qt = manhattan_map();
    const KroneckerInstance mapped(inst.alpha * qt, inst.lattice.transformed(qt), inst.N);
    GapSpectrum s = gap_spectrum(mapped, Metric::Max);
    s.instance = inst;
    s.metric = Metric::Manhattan;
    return s;
}

std::optional<std::int64_t> gap_bound(Metric metric, std::size_t d)
{
    switch (metric) {
        case Metric::Max:
            if (d < 62) {
                return (std::int64_t{1} << d) + 1;
            }
            return std::nullopt;
        case Metric::Euclidean:
            if (d == 1) {
                return 3;
            }
            if (d == 2) {
                return 5;
            }
            return std::nullopt;
        case Metric::Manhattan:
            if (d == 1) {
                return 3;
            }
            if (d == 2) {
                return 5;
            }
            return std::nullopt;
    }
    return std::nullopt;
}

BoundCheck check_bound(const GapSpectrum& spectrum)
{
    BoundCheck check;
    check.bound = gap_bound(spectrum.metric, spectrum.instance.dim());
    const auto g = static_cast<std::int64_t>(spectrum.g());
    std::ostringstream report;
    if (!check.bound) {
        report << "g = " << g << " (no bound asserted)";
        check.report = report.str();
        return check;
    }
    check.ok = g <= *check.bound;
    report << "g = " << g << " (bound " << *check.bound << ": " << (check.ok ? "OK" : "VIOLATED") << ")";
    if (!check.ok) {
        report << " for " << describe(spectrum.instance) << " metric=" << to_string(spectrum.metric);
    }
    check.report = report.str();
    return check;
}

std::string describe(const KroneckerInstance& inst)
{
    std::ostringstream os;
    os << "alpha=(";
    for (std::size_t i = 0; i < inst.dim(); ++i) {
        os << (i == 0 ? "" : ",") << inst.alpha[i];
    }
    os << ") L=";
    if (inst.lattice.is_standard()) {
        os << "Z^" << inst.dim();
    } else {
        os << "[";
        for (std::size_t r = 0; r < inst.dim(); ++r) {
            for (std::size_t c = 0; c < inst.dim(); ++c) {
                os << (c == 0 ? (r == 0 ? "" : ";") : ",") << inst.lattice.basis()(r, c);
            }
        }
        os << "]";
    }
    os << " N=" << inst.N;
    return os.str();
}

}  // namespace kgap
