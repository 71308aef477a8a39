#include <cstdlib>
#include <string>

#include "kgap/rational.hpp"
#include "variants.hpp"

namespace kgap::kernels {

namespace {

bool cpu_has(Isa isa)
{
    switch (isa) {
        case Isa::Scalar:
            return true;
#if defined(__x86_64__) || defined(__i386__)
        case Isa::Sse41:
            return __builtin_cpu_supports("sse4.1") != 0;
        case Isa::Avx2:
            return __builtin_cpu_supports("avx2") != 0;
        case Isa::Neon:
            return false;
#elif defined(__aarch64__) || defined(_M_ARM64)
        case Isa::Sse41:
        case Isa::Avx2:
            return false;
        case Isa::Neon:
            return true;
#else
        default:
            return false;
#endif
    }
    return false;
}

Isa detect_best()
{
    for (Isa isa : {Isa::Avx2, Isa::Neon, Isa::Sse41}) {
        if (cpu_has(isa)) {
            return isa;
        }
    }
    return Isa::Scalar;
}

}  // namespace

bool sweep_fits(std::size_t dim, std::int64_t modulus, Reduce reduce)
{
    if (dim == 0 || modulus < 1 || modulus > max_modulus) {
        return false;
    }
    if (reduce == Reduce::Sum) {
        return static_cast<std::int64_t>(dim) * (modulus / 2) <= INT32_MAX;
    }
    return true;
}

void residue_norms(const ResidueSweep& sweep, std::span<std::int32_t> out, Isa isa)
{
    if (!sweep_fits(sweep.steps.size(), sweep.modulus, sweep.reduce)) {
        throw Error("residue sweep out of range for int32 lanes");
    }
    for (std::int32_t s : sweep.steps) {
        if (s < 0 || s >= sweep.modulus) {
            throw Error("residue sweep step outside [0, modulus)");
        }
    }
    if (!isa_available(isa)) {
        throw Error("instruction set '" + std::string(to_string(isa)) + "' not available on this CPU");
    }
    switch (isa) {
        case Isa::Scalar:
            detail::residue_norms_scalar(sweep, out);
            return;
        case Isa::Sse41:
            detail::residue_norms_sse41(sweep, out);
            return;
        case Isa::Avx2:
            detail::residue_norms_avx2(sweep, out);
            return;
        case Isa::Neon:
            detail::residue_norms_neon(sweep, out);
            return;
    }
}

void residue_norms(const ResidueSweep& sweep, std::span<std::int32_t> out)
{
    residue_norms(sweep, out, active_isa());
}

std::string_view to_string(Isa isa)
{
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Sse41:
            return "sse4.1";
        case Isa::Avx2:
            return "avx2";
        case Isa::Neon:
            return "neon";
    }
    return "scalar";
}

Isa parse_isa(std::string_view text)
{
    for (Isa isa : {Isa::Scalar, Isa::Sse41, Isa::Avx2, Isa::Neon}) {
        if (text == to_string(isa)) {
            return isa;
        }
    }
    throw Error("unknown instruction set '" + std::string(text) + "'");
}

bool isa_available(Isa isa)
{
#if !defined(KGAP_HAVE_X86_KERNELS)
    if (isa == Isa::Sse41 || isa == Isa::Avx2) {
        return false;
    }
#endif
    return cpu_has(isa);
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Sse41, Isa::Avx2, Isa::Neon}) {
        if (isa_available(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

Isa active_isa()
{
    static const Isa chosen = [] {
        if (const char* forced = std::getenv("KGAP_ISA"); forced != nullptr && *forced != '\0') {
            const Isa isa = parse_isa(forced);
            if (isa_available(isa)) {
                return isa;
            }
        }
        Isa best = detect_best();
        return isa_available(best) ? best : Isa::Scalar;
    }();
    return chosen;
}

}  // namespace kgap::kernels
