#include "kgap/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kgap/generic_lattice.hpp"
#include "kgap/io.hpp"
#include "kgap/kernels.hpp"
#include "kgap/search.hpp"
#include "kgap/slab.hpp"

namespace kgap::cli {

namespace {

struct InstanceFlags {
    std::string alpha;
    std::string lattice = "I";
    std::int64_t N = 0;
    std::string input;

    void add_to(CLI::App& app)
    {
        app.add_option("--alpha", alpha, "Rotation vector, e.g. 157/500,-23/200");
        app.add_option("--lattice", lattice, "I for Z^d, or rows such as '1,0;1/2,2'")->capture_default_str();
        app.add_option("--N", N, "Number of points of the sequence");
        app.add_option("--input", input, "Read the instance from a JSON file instead");
    }

    KroneckerInstance build() const
    {
        if (!input.empty()) {
            std::ifstream in(input);
            if (!in) {
                throw Error("cannot open '" + input + "'");
            }
            return io::instance_from_json(io::Json::parse(in));
        }
        if (alpha.empty()) {
            throw Error("--alpha is required");
        }
        if (N < 1) {
            throw Error("--N must be a positive integer");
        }
        RatVec a = io::parse_rational_list(alpha);
        Lattice l = io::parse_lattice(lattice, a.dim());
        return KroneckerInstance(std::move(a), std::move(l), N);
    }
};

void print_list(std::ostream& out, const std::vector<Rational>& values)
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i == 0 ? "" : " ") << values[i];
    }
}

void print_vec(std::ostream& out, const RatVec& v)
{
    out << "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        out << (i == 0 ? "" : ",") << v[i];
    }
    out << ")";
}

int cmd_gaps(const InstanceFlags& flags, const std::string& metric_name, const std::string& format, bool via_map,
             std::ostream& out)
{
    const KroneckerInstance inst = flags.build();
    const Metric metric = parse_metric(metric_name);
    GapSpectrum s = via_map ? manhattan_via_map(inst) : gap_spectrum(inst, metric);
    if (via_map && metric != Metric::Manhattan) {
        throw Error("--via-map applies to the manhattan metric only");
    }
    const BoundCheck check = check_bound(s);

    if (format == "json") {
        io::Json j = io::to_json(s);
        j["bound"] = check.bound ? io::Json(*check.bound) : io::Json(nullptr);
        j["bound_ok"] = check.ok;
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        out << io::to_csv(s);
    } else {
        out << describe(inst) << " metric=" << to_string(metric) << '\n';
        out << (metric == Metric::Euclidean ? "n delta^2\n" : "n delta\n");
        for (std::size_t i = 0; i < s.deltas.size(); ++i) {
            out << (i + 1) << ' ' << s.deltas[i] << '\n';
        }
        out << "distinct (" << s.g() << "): ";
        print_list(out, s.distinct);
        out << '\n' << check.report << '\n';
    }
    return check.ok ? exit_ok : exit_violation;
}

int cmd_slab_generic(const std::string& path, double tolerance, bool tolerance_set, const std::string& format,
                     std::ostream& out)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    GenericLattice m = io::generic_lattice_from_json(io::Json::parse(in));
    if (tolerance_set) {
        m.tolerance = tolerance;
    }
    const std::size_t G = generic_value_count(m);
    const std::size_t d = m.dim() - 1;
    const auto bound = gap_bound(Metric::Max, d);
    const bool ok = !bound || static_cast<std::int64_t>(G) <= *bound;
    if (format == "json") {
        io::Json j;
        j["d"] = d;
        j["tolerance"] = m.tolerance;
        j["G"] = G;
        j["bound"] = bound ? io::Json(*bound) : io::Json(nullptr);
        j["bound_ok"] = ok;
        out << j.dump(2) << '\n';
    } else {
        out << "G = " << G << " (bound " << (bound ? std::to_string(*bound) : "none") << ": "
            << (ok ? "OK" : "VIOLATED") << ")\n";
    }
    return ok ? exit_ok : exit_violation;
}

int cmd_slab(const InstanceFlags& flags, const std::string& format, std::ostream& out)
{
    const KroneckerInstance inst = flags.build();
    if (!inst.lattice.unimodular()) {
        throw Error("slab requires a unimodular lattice (|det| = 1)");
    }
    const Slab slab(inst);
    const SlabCounts counts = slab.counts();
    const CandidateSet cands = slab.candidate_set();
    const GapSpectrum spectrum = gap_spectrum(inst, Metric::Max);

    bool identity = counts.g_slab == spectrum.g();
    for (std::int64_t n = 1; n <= inst.N && identity; ++n) {
        identity = slab.F(n) == spectrum.deltas[static_cast<std::size_t>(n - 1)];
    }
    const auto bound = *gap_bound(Metric::Max, inst.dim());
    const bool sandwich = counts.g_slab <= counts.G && static_cast<std::int64_t>(counts.G) <= bound;
    bool orthants = true;
    for (std::size_t i = 0; i + 1 < cands.K(); ++i) {
        for (std::size_t j = i + 1; j + 1 < cands.K(); ++j) {
            if (share_closed_orthant(orthant_signature(cands.points[i]), orthant_signature(cands.points[j]))) {
                orthants = false;
            }
        }
    }

    if (format == "json") {
        io::Json j = io::instance_to_json(inst);
        j["N_plus"] = slab.factors().N_plus.str();
        j["radius"] = slab.radius().str();
        j["g"] = spectrum.g();
        j["g_slab"] = counts.g_slab;
        j["G"] = counts.G;
        j["bound"] = bound;
        j["identity_ok"] = identity;
        j["sandwich_ok"] = sandwich;
        j["orthant_exclusion_ok"] = orthants;
        j["candidates"] = io::to_json(cands);
        out << j.dump(2) << '\n';
    } else {
        out << describe(inst) << '\n';
        out << "N+ = " << slab.factors().N_plus << ", R* = " << slab.radius() << '\n';
        out << "candidates (K = " << cands.K() << "):\n";
        for (const auto& p : cands.points) {
            out << "  k=" << p.k << " v=";
            print_vec(out, p.v);
            out << " |v|=" << p.vnorm << " signature=" << to_string(orthant_signature(p)) << '\n';
        }
        out << "orthant exclusion: " << (orthants ? "OK" : "FAILED") << '\n';
        out << "g <= G <= " << bound << ": " << (sandwich ? "OK" : "FAILED") << '\n';
        out << "g = " << counts.g_slab << ", G = " << counts.G << ", identity " << (identity ? "OK" : "FAILED")
            << '\n';
    }
    return identity && sandwich && orthants ? exit_ok : exit_violation;
}

std::string default_output_path(const SearchConfig& cfg)
{
    const char* dir = std::getenv("KGAP_OUTPUT_DIR");
    if (dir == nullptr || *dir == '\0') {
        return {};
    }
    std::ostringstream name;
    name << "search-d" << cfg.d << "-" << to_string(cfg.mode) << "-seed" << cfg.seed << ".jsonl";
    return (std::filesystem::path(dir) / name.str()).string();
}

int cmd_replay(const std::string& path, std::ostream& out, std::ostream& err)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::string line;
    std::size_t total = 0;
    std::size_t failed = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        ++total;
        const SearchRecord rec = record_from_json(io::Json::parse(line));
        const ReplayResult r = replay(rec);
        if (!r.ok) {
            ++failed;
            err << "replay mismatch on line " << total << ": g " << r.recorded_g << " vs " << r.actual_g << ", digest "
                << r.recorded_digest << " vs " << r.actual_digest << '\n';
        }
    }
    out << "replayed " << total << " records, " << failed << " mismatches\n";
    return failed == 0 ? exit_ok : exit_usage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gap spectra of Kronecker sequences on tori"};
    app.require_subcommand(1);
    app.set_version_flag("--version", KGAP_VERSION);

    // gaps
    auto* gaps = app.add_subcommand("gaps", "Gap spectrum and distinct-gap count");
    InstanceFlags gaps_flags;
    gaps_flags.add_to(*gaps);
    std::string gaps_metric = "max";
    std::string gaps_format = "text";
    bool via_map = false;
    gaps->add_option("--metric", gaps_metric, "max, euclidean or manhattan")->capture_default_str();
    gaps->add_option("--format", gaps_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    gaps->add_flag("--via-map", via_map, "Manhattan metric in d=2 through the max-metric map");

    // slab
    auto* slab = app.add_subcommand("slab", "Slab-lattice counts and candidate vectors");
    InstanceFlags slab_flags;
    slab_flags.add_to(*slab);
    std::string slab_format = "text";
    std::string generic_path;
    double tolerance = 1e-9;
    slab->add_option("--format", slab_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    slab->add_option("--generic", generic_path, "JSON (d+1)x(d+1) float matrix; counts values of F for it");
    auto* tol_opt = slab->add_option("--tolerance", tolerance, "Float-path tolerance");

    // search
    auto* search_cmd = app.add_subcommand("search", "Search for instances with many distinct gaps");
    SearchConfig cfg;
    std::string n_range = "1..100";
    std::string mode = "random";
    std::string search_metric = "max";
    std::string search_lattice = "I";
    std::string out_path;
    std::string replay_path;
    std::int64_t samples = 1000;
    std::size_t target = 0;
    std::uint64_t max_evals = 0;
    search_cmd->add_option("--d", cfg.d, "Dimension")->capture_default_str();
    search_cmd->add_option("--den-cap", cfg.denominator_cap, "Largest denominator")->capture_default_str();
    search_cmd->add_option("--den-min", cfg.denominator_min, "Smallest denominator")->capture_default_str();
    search_cmd->add_option("--N", n_range, "Range of N, e.g. 5..30")->capture_default_str();
    search_cmd->add_option("--mode", mode, "random or exhaustive")->capture_default_str();
    search_cmd->add_option("--samples", samples, "Samples in random mode")->capture_default_str();
    search_cmd->add_option("--seed", cfg.seed, "Seed")->capture_default_str();
    search_cmd->add_option("--target-g", target, "Stop once g reaches this value");
    search_cmd->add_option("--metric", search_metric, "max, euclidean or manhattan")->capture_default_str();
    search_cmd->add_option("--lattice", search_lattice, "I or rational rows")->capture_default_str();
    search_cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    search_cmd->add_option("--max-evals", max_evals, "Evaluation budget");
    search_cmd->add_option("--out", out_path, "JSONL output file (default: $KGAP_OUTPUT_DIR)");
    search_cmd->add_option("--replay", replay_path, "Replay the records of a JSONL file instead of searching");

    // verify
    auto* verify = app.add_subcommand("verify", "Built-in verification suites");
    std::string suite = "paper";
    std::uint64_t verify_seed = 42;
    std::size_t verify_count = 60;
    verify->add_option("--suite", suite, "paper (the two optimal witnesses), properties or d1-exhaustive")
        ->check(CLI::IsMember({"paper", "properties", "d1-exhaustive"}))
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "Seed for the properties suite")->capture_default_str();
    verify->add_option("--count", verify_count, "Instances per dimension for the properties suite")
        ->capture_default_str();

    std::vector<std::string> argv_store{"kgap"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_store.size());
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << KGAP_VERSION << '\n';
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (gaps->parsed()) {
            return cmd_gaps(gaps_flags, gaps_metric, gaps_format, via_map, out);
        }
        if (slab->parsed()) {
            if (!generic_path.empty()) {
                return cmd_slab_generic(generic_path, tolerance, tol_opt->count() > 0, slab_format, out);
            }
            return cmd_slab(slab_flags, slab_format, out);
        }
        if (search_cmd->parsed()) {
            if (!replay_path.empty()) {
                return cmd_replay(replay_path, out, err);
            }
            if (samples < 0) {
                throw Error("--samples must be >= 1");
            }
            cfg.sample_count = static_cast<std::uint64_t>(samples);
            cfg.N_range = IntRange::parse(n_range);
            cfg.mode = parse_search_mode(mode);
            cfg.metric = parse_metric(search_metric);
            if (target > 0) {
                cfg.target_g = target;
            }
            if (max_evals > 0) {
                cfg.max_evaluations = max_evals;
            }
            cfg.lattice = io::parse_lattice(search_lattice, cfg.d);
            cfg.validate();

            if (out_path.empty()) {
                out_path = default_output_path(cfg);
            }
            std::ofstream jsonl;
            if (!out_path.empty()) {
                jsonl.open(out_path, std::ios::app);
                if (!jsonl) {
                    throw Error("cannot open '" + out_path + "' for writing");
                }
            }
            const std::string start = iso8601_now();
            const SearchResult result = search(cfg, [&](const SearchRecord& r) {
                const std::string line = to_json(r).dump();
                out << line << '\n';
                if (jsonl.is_open()) {
                    jsonl << line << '\n';
                    jsonl.flush();
                }
            });
            const std::string end = iso8601_now();
            if (!out_path.empty()) {
                io::Json manifest;
                manifest["config"] = to_json(cfg);
                manifest["code_version"] = KGAP_VERSION;
                manifest["kernel_isa"] = std::string(kernels::to_string(kernels::active_isa()));
                manifest["start_time"] = start;
                manifest["end_time"] = end;
                manifest["evaluated"] = result.evaluated;
                manifest["complete"] = result.complete;
                manifest["max_g"] = result.max_g;
                manifest["violations"] = result.violations.size();
                std::ofstream(out_path + ".manifest.json") << manifest.dump(2) << '\n';
            }
            for (const auto& v : result.violations) {
                err << "BOUND VIOLATION (reproducer follows)\n" << to_json(v).dump(2) << '\n';
            }
            out << "summary: max g = " << result.max_g << ", evaluated " << result.evaluated << ", "
                << (result.complete ? "complete" : "incomplete") << '\n';
            return result.violations.empty() ? exit_ok : exit_violation;
        }
        if (verify->parsed()) {
            bool ok = false;
            if (suite == "paper") {
                ok = verify_witnesses(out);
            } else if (suite == "properties") {
                ok = verify_properties(verify_seed, verify_count, out);
            } else {
                ok = verify_d1_exhaustive(out);
            }
            out << (ok ? "PASS" : "FAIL") << '\n';
            return ok ? exit_ok : exit_violation;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace kgap::cli
