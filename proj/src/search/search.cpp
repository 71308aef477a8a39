#include "kgap/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <exception>
#include <numeric>
#include <random>
#include <thread>

#include "kgap/fast_spectrum.hpp"
#include "kgap/sampling.hpp"

namespace kgap {

namespace {

constexpr std::size_t chunk_size = 4096;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Task {
    RatVec alpha;
    std::int64_t N = 1;
    std::uint64_t seed = 0;
};

class TaskSource {
public:
    explicit TaskSource(const SearchConfig& cfg) : cfg_(cfg), numerators_(cfg.d, 0), q_(cfg.denominator_min)
    {
        n_ = cfg.N_range.lo;
    }

    bool exhausted() const { return done_; }

    std::vector<Task> next(std::size_t limit)
    {
        std::vector<Task> out;
        while (out.size() < limit && !done_) {
            if (cfg_.mode == SearchMode::Random) {
                if (index_ >= cfg_.sample_count) {
                    done_ = true;
                    break;
                }
                out.push_back(random_task(index_++));
            } else {
                auto t = grid_task();
                if (t) {
                    out.push_back(std::move(*t));
                }
            }
        }
        return out;
    }

private:
    const SearchConfig& cfg_;
    std::uint64_t index_ = 0;
    std::vector<std::int64_t> numerators_;
    std::int64_t q_;
    std::int64_t n_ = 1;
    bool done_ = false;

    Task random_task(std::uint64_t i) const
    {
        const std::uint64_t sample_seed = splitmix64(cfg_.seed ^ splitmix64(i));
        std::mt19937_64 rng(sample_seed);
        std::vector<Rational> alpha;
        alpha.reserve(cfg_.d);
        for (std::size_t j = 0; j < cfg_.d; ++j) {
            const std::int64_t q = sampling::uniform(rng, std::max<std::int64_t>(1, cfg_.denominator_min), cfg_.denominator_cap);
            const std::int64_t p = sampling::uniform(rng, -(q - 1), q - 1);
            alpha.push_back(Rational::reduce(p, q));
        }
        const std::int64_t N = sampling::uniform(rng, cfg_.N_range.lo, cfg_.N_range.hi);
        return Task{RatVec(std::move(alpha)), N, sample_seed};
    }

    // Walks q, then numerator tuples in [0, q)^d with exact denominator q,
    // then N. Returns nullopt for skipped tuples so callers re-check limits.
    std::optional<Task> grid_task()
    {
        if (q_ > cfg_.denominator_cap) {
            done_ = true;
            return std::nullopt;
        }
        std::optional<Task> task;
        std::int64_t common = q_;
        for (auto p : numerators_) {
            common = std::gcd(common, p);
        }
        if (common == 1) {
            std::vector<Rational> alpha;
            alpha.reserve(cfg_.d);
            for (auto p : numerators_) {
                alpha.push_back(Rational::reduce(p, q_));
            }
            task = Task{RatVec(std::move(alpha)), n_, cfg_.seed};
            if (++n_ <= cfg_.N_range.hi) {
                return task;
            }
        }
        n_ = cfg_.N_range.lo;
        std::size_t j = 0;
        for (; j < numerators_.size(); ++j) {
            if (++numerators_[j] < q_) {
                break;
            }
            numerators_[j] = 0;
        }
        if (j == numerators_.size()) {
            ++q_;
        }
        return task;
    }
};

std::size_t evaluate(const Task& t, const Lattice& lattice, Metric metric, bool fast_ok)
{
    if (fast_ok) {
        if (auto f = fast_gap_spectrum(t.alpha, t.N, metric)) {
            return f->g();
        }
    }
    return gap_spectrum(KroneckerInstance(t.alpha, lattice, t.N), metric).g();
}

std::vector<std::size_t> evaluate_all(const std::vector<Task>& tasks, const Lattice& lattice, Metric metric,
                                      bool fast_ok, unsigned threads)
{
    std::vector<std::size_t> out(tasks.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            out[i] = evaluate(tasks[i], lattice, metric, fast_ok);
        }
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < tasks.size(); i += workers) {
                    out[i] = evaluate(tasks[i], lattice, metric, fast_ok);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(SearchMode mode)
{
    return mode == SearchMode::Random ? "random" : "exhaustive";
}

SearchMode parse_search_mode(std::string_view text)
{
    if (text == "random") {
        return SearchMode::Random;
    }
    if (text == "exhaustive") {
        return SearchMode::Exhaustive;
    }
    throw Error("unknown search mode '" + std::string(text) + "'");
}

IntRange IntRange::parse(std::string_view text)
{
    auto to_int = [&](std::string_view s) {
        if (s.empty()) {
            throw Error("invalid range '" + std::string(text) + "'");
        }
        const Rational r = Rational::parse(s);
        if (!r.is_integer() || !r.num().fits_slong_p()) {
            throw Error("invalid range '" + std::string(text) + "'");
        }
        return static_cast<std::int64_t>(r.num().get_si());
    };
    IntRange r;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        r.lo = to_int(text.substr(0, dots));
        r.hi = to_int(text.substr(dots + 2));
    } else {
        r.lo = r.hi = to_int(text);
    }
    if (r.lo > r.hi) {
        throw Error("empty range '" + std::string(text) + "'");
    }
    return r;
}

std::string IntRange::str() const
{
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

void SearchConfig::validate() const
{
    if (d < 1) {
        throw Error("d must be >= 1");
    }
    if (denominator_cap < 2) {
        throw Error("denominator cap must be >= 2");
    }
    if (denominator_min < 1 || denominator_min > denominator_cap) {
        throw Error("denominator minimum must lie in [1, cap]");
    }
    if (N_range.lo < 1 || N_range.lo > N_range.hi) {
        throw Error("N range must be a nonempty range of positive integers");
    }
    if (mode == SearchMode::Random && sample_count < 1) {
        throw Error("random mode requires sample count >= 1");
    }
    if (lattice && lattice->dim() != d) {
        throw Error("lattice dimension does not match d");
    }
    if (target_g && *target_g < 1) {
        throw Error("target g must be >= 1");
    }
}

Lattice SearchConfig::effective_lattice() const
{
    return lattice ? *lattice : Lattice::standard(d);
}

std::string distinct_digest(const std::vector<Rational>& distinct)
{
    std::uint64_t h = 1469598103934665603ULL;
    bool first = true;
    for (const auto& v : distinct) {
        const std::string text = (first ? "" : ",") + v.str();
        first = false;
        for (char c : text) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SearchRecord make_record(const KroneckerInstance& inst, Metric metric, std::uint64_t seed, std::string timestamp)
{
    const GapSpectrum s = gap_spectrum(inst, metric);
    return SearchRecord{inst, metric, s.g(), distinct_digest(s.distinct), seed, std::move(timestamp)};
}

SearchResult search(const SearchConfig& cfg, const std::function<void(const SearchRecord&)>& on_record)
{
    cfg.validate();
    const Lattice lattice = cfg.effective_lattice();
    const bool fast_ok = lattice.is_standard();
    const auto bound = gap_bound(cfg.metric, cfg.d);
    const unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    auto now = [&] { return cfg.clock ? cfg.clock() : iso8601_now(); };
    auto emit = [&](const SearchRecord& r) {
        if (on_record) {
            on_record(r);
        }
    };

    SearchResult result;
    TaskSource source(cfg);
    for (;;) {
        std::size_t limit = chunk_size;
        if (cfg.max_evaluations) {
            if (result.evaluated >= *cfg.max_evaluations) {
                result.complete = source.next(1).empty();
                break;
            }
            limit = static_cast<std::size_t>(std::min<std::uint64_t>(limit, *cfg.max_evaluations - result.evaluated));
        }
        const std::vector<Task> tasks = source.next(limit);
        if (tasks.empty()) {
            break;
        }
        const auto gs = evaluate_all(tasks, lattice, cfg.metric, fast_ok, threads);
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            ++result.evaluated;
            const std::size_t g = gs[i];
            const KroneckerInstance inst(tasks[i].alpha, lattice, tasks[i].N);
            if (bound && static_cast<std::int64_t>(g) > *bound) {
                result.violations.push_back(make_record(inst, cfg.metric, tasks[i].seed, now()));
                emit(result.violations.back());
                result.complete = false;
                result.max_g = std::max(result.max_g, g);
                return result;
            }
            if (g > result.max_g) {
                result.max_g = g;
                result.best.push_back(make_record(inst, cfg.metric, tasks[i].seed, now()));
                emit(result.best.back());
                if (cfg.target_g && g >= *cfg.target_g) {
                    return result;
                }
            }
        }
    }
    return result;
}

ReplayResult replay(const SearchRecord& record)
{
    const GapSpectrum s = gap_spectrum(record.instance, record.metric);
    ReplayResult r;
    r.recorded_g = record.g;
    r.actual_g = s.g();
    r.recorded_digest = record.distinct_digest;
    r.actual_digest = distinct_digest(s.distinct);
    r.ok = r.recorded_g == r.actual_g && r.recorded_digest == r.actual_digest;
    return r;
}

io::Json to_json(const SearchRecord& r)
{
    io::Json j = io::instance_to_json(r.instance);
    j["metric"] = std::string(to_string(r.metric));
    j["g"] = r.g;
    j["distinct_digest"] = r.distinct_digest;
    j["seed"] = r.seed;
    j["timestamp"] = r.timestamp;
    return j;
}

SearchRecord record_from_json(const io::Json& j)
{
    SearchRecord r{io::instance_from_json(j), parse_metric(j.at("metric").get<std::string>()),
                   j.at("g").get<std::size_t>(), j.at("distinct_digest").get<std::string>(),
                   j.at("seed").get<std::uint64_t>(), j.value("timestamp", std::string())};
    return r;
}

io::Json to_json(const SearchConfig& cfg)
{
    io::Json j;
    j["d"] = cfg.d;
    j["denominator_cap"] = cfg.denominator_cap;
    j["denominator_min"] = cfg.denominator_min;
    j["N_range"] = cfg.N_range.str();
    j["metric"] = std::string(to_string(cfg.metric));
    j["mode"] = std::string(to_string(cfg.mode));
    j["sample_count"] = cfg.sample_count;
    j["seed"] = cfg.seed;
    j["target_g"] = cfg.target_g ? io::Json(*cfg.target_g) : io::Json(nullptr);
    j["lattice_basis"] = io::basis_to_json(cfg.effective_lattice());
    j["max_evaluations"] = cfg.max_evaluations ? io::Json(*cfg.max_evaluations) : io::Json(nullptr);
    return j;
}

std::string iso8601_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace kgap
