#pragma once

// Text formats. Every rational is written as a canonical "p/q" string and
// never as a float.

#include <string>
#include <string_view>

#include "json.hpp"
#include "kgap/generic_lattice.hpp"
#include "kgap/slab.hpp"
#include "kgap/torus_gaps.hpp"

namespace kgap::io {

using Json = nlohmann::ordered_json;

/// "157/500,-23/200" or "0.314,1/3".
RatVec parse_rational_list(std::string_view text);

/// "I" (Z^d) or semicolon-separated rows of comma-separated rationals.
Lattice parse_lattice(std::string_view text, std::size_t dim);

Json to_json(const RatVec& v);
RatVec rat_vec_from_json(const Json& j);

Json basis_to_json(const Lattice& lattice);
Lattice lattice_from_json(const Json& j);

/// {d, alpha, lattice_basis, N}
Json instance_to_json(const KroneckerInstance& inst);
KroneckerInstance instance_from_json(const Json& j);

/// {d, alpha, lattice_basis, N, metric, deltas, distinct, g}
Json to_json(const GapSpectrum& s);
GapSpectrum spectrum_from_json(const Json& j);

/// Header "n,delta" and one row per n.
std::string to_csv(const GapSpectrum& s);

/// {K, points: [{k, v, ell, vnorm, signature}]}
Json to_json(const CandidateSet& c);

/// Either a bare array of rows or {"matrix": rows, "tolerance": t}.
GenericLattice generic_lattice_from_json(const Json& j);

}  // namespace kgap::io
