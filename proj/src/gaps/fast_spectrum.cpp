#include "kgap/fast_spectrum.hpp"

#include <algorithm>

namespace kgap {

Rational FastSpectrum::delta(std::int64_t n) const
{
    return Rational::reduce(deltas.at(static_cast<std::size_t>(n - 1)), denominator);
}

std::optional<FastSpectrum> fast_gap_spectrum(const RatVec& alpha, std::int64_t N, Metric metric, kernels::Isa isa)
{
    if (metric == Metric::Euclidean || N < 1 || alpha.dim() == 0) {
        return std::nullopt;
    }
    const auto reduce = metric == Metric::Max ? kernels::Reduce::Max : kernels::Reduce::Sum;

    Integer common = 1;
    for (const auto& a : alpha) {
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), a.den().get_mpz_t());
    }
    if (!common.fits_slong_p() || !kernels::wide_sweep_fits(alpha.dim(), common.get_si(), reduce)) {
        return std::nullopt;
    }
    const std::int64_t D = common.get_si();
    const bool narrow = kernels::sweep_fits(alpha.dim(), D, reduce);

    std::vector<std::int64_t> steps(alpha.dim());
    for (std::size_t i = 0; i < alpha.dim(); ++i) {
        Integer scaled = alpha[i].num() * (common / alpha[i].den());
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), scaled.get_mpz_t(), common.get_mpz_t());
        steps[i] = r.get_si();
    }

    // |k alpha| depends only on |k|, and every window [1 - n, N - n]
    // contains 0, so the n-th gap is the running minimum over
    // |k| <= max(n - 1, N - n). A zero norm (k alpha in Z^d) is replaced by
    // the shortest vector of Z^d, which has length 1 in both metrics.
    std::vector<std::int64_t> norms(static_cast<std::size_t>(N));
    if (narrow) {
        std::vector<std::int32_t> steps32(steps.begin(), steps.end());
        std::vector<std::int32_t> norms32(norms.size());
        kernels::residue_norms({steps32, static_cast<std::int32_t>(D), reduce}, norms32, isa);
        std::copy(norms32.begin(), norms32.end(), norms.begin());
    } else {
        kernels::residue_norms_wide(steps, D, reduce, norms);
    }
    std::int64_t running = D;
    for (auto& v : norms) {
        running = std::min(running, v == 0 ? D : v);
        v = running;
    }

    FastSpectrum out;
    out.denominator = D;
    out.deltas.resize(static_cast<std::size_t>(N));
    for (std::int64_t n = 1; n <= N; ++n) {
        out.deltas[static_cast<std::size_t>(n - 1)] = norms[static_cast<std::size_t>(std::max(n - 1, N - n))];
    }
    out.distinct = out.deltas;
    std::sort(out.distinct.begin(), out.distinct.end());
    out.distinct.erase(std::unique(out.distinct.begin(), out.distinct.end()), out.distinct.end());
    return out;
}

}  // namespace kgap
