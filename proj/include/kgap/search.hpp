#pragma once

// Randomized and exhaustive search over rational Kronecker instances for
// large gap counts.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgap/io.hpp"
#include "kgap/torus_gaps.hpp"

namespace kgap {

enum class SearchMode { Random, Exhaustive };

std::string_view to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view text);

struct IntRange {
    std::int64_t lo = 1;
    std::int64_t hi = 1;

    /// "5..30" or a single "11".
    static IntRange parse(std::string_view text);
    std::string str() const;
};

struct SearchConfig {
    std::size_t d = 2;
    std::int64_t denominator_cap = 10000;
    /// Exhaustive mode walks denominators q in [denominator_min, denominator_cap].
    std::int64_t denominator_min = 1;
    IntRange N_range{1, 100};
    Metric metric = Metric::Max;
    SearchMode mode = SearchMode::Random;
    std::uint64_t sample_count = 1000;
    std::uint64_t seed = 0;
    std::optional<std::size_t> target_g;
    /// Z^d when unset.
    std::optional<Lattice> lattice;
    /// Evaluation budget; reaching it marks the result incomplete.
    std::optional<std::uint64_t> max_evaluations;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Timestamp source for records; ISO-8601 wall clock when unset.
    std::function<std::string()> clock;

    /// Throws Error on an invalid configuration.
    void validate() const;
    Lattice effective_lattice() const;
};

struct SearchRecord {
    KroneckerInstance instance;
    Metric metric = Metric::Max;
    std::size_t g = 0;
    std::string distinct_digest;
    std::uint64_t seed = 0;
    std::string timestamp;
};

struct SearchResult {
    /// Records that raised the running maximum of g, in discovery order.
    std::vector<SearchRecord> best;
    /// Max-metric records with g > 2^d + 1. Non-empty means the search stopped.
    std::vector<SearchRecord> violations;
    std::uint64_t evaluated = 0;
    bool complete = true;
    std::size_t max_g = 0;
};

/// Runs the search. on_record sees each record of `best` and `violations`
/// as it is produced, in the same order regardless of thread count.
SearchResult search(const SearchConfig& cfg, const std::function<void(const SearchRecord&)>& on_record = {});

struct ReplayResult {
    bool ok = false;
    std::size_t recorded_g = 0;
    std::size_t actual_g = 0;
    std::string recorded_digest;
    std::string actual_digest;
};

/// Recomputes the exact spectrum of a record and compares g and digest.
ReplayResult replay(const SearchRecord& record);

/// 16-hex-digit FNV-1a over the canonical text "p/q,p/q,..." of the values.
std::string distinct_digest(const std::vector<Rational>& distinct);

/// Builds a record from an exact recomputation of the instance.
SearchRecord make_record(const KroneckerInstance& inst, Metric metric, std::uint64_t seed, std::string timestamp);

io::Json to_json(const SearchRecord& r);
SearchRecord record_from_json(const io::Json& j);

io::Json to_json(const SearchConfig& cfg);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string iso8601_now();

}  // namespace kgap
