#pragma once

// Command-line front end: subcommands enumerate, decide, certify, census,
// sweep, isolate. Flags may come from a key = value config file (sections per
// subcommand); explicit flags override the file. All file output is atomic.
//
// Exit codes: 0 success (decide/certify: Colorable), 20 NotColorable,
// 30 Indeterminate, 2 usage error, 1 internal error.

#include <chrono>
#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vdw/io.hpp"

namespace vdw {
namespace cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNotColorable = 20;
inline constexpr int kExitIndeterminate = 30;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 1;

namespace detail {

inline std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline ordered_json envelope(const std::string& command, ordered_json config,
                             ordered_json payload, int status) {
    ordered_json j;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["config"] = std::move(config);
    j["timestamp"] = utc_timestamp();
    j["status"] = status;
    j["payload"] = std::move(payload);
    return j;
}

inline void deliver(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        atomic_write_text(out_path, text);
}

inline ordered_json census_to_json(const CensusRecord& c) {
    ordered_json j;
    auto map_to_json = [](const std::map<int, std::int64_t>& m) {
        ordered_json o = ordered_json::object();
        for (const auto& [k, v] : m) o[std::to_string(k)] = v;
        return o;
    };
    j["ap_counts"] = map_to_json(c.ap_counts);
    j["q1_pair_overlaps"] = map_to_json(c.q1_pair_overlaps);
    j["simple_paths_by_length"] = map_to_json(c.simple_paths_by_length);
    j["special_cycles"] = c.special_cycles;
    j["cycles_with_handle"] = c.cycles_with_handle;
    j["spoiled_paths"] = c.spoiled_paths;
    j["reduced_fano"] = c.reduced_fano;
    j["saws"] = c.saws;
    j["spoiled_extensions"] = c.spoiled_extensions;
    j["nonsimple_covered_shorts"] = c.nonsimple_covered_shorts;
    return j;
}

inline std::string census_to_csv(const CensusRecord& c) {
    std::string s = "key,value\n";
    for (const auto& [k, v] : c.ap_counts)
        s += "ap_count_" + std::to_string(k) + "," + std::to_string(v) + "\n";
    for (const auto& [k, v] : c.q1_pair_overlaps)
        s += "q1_pair_overlap_" + std::to_string(k) + "," + std::to_string(v) + "\n";
    for (const auto& [k, v] : c.simple_paths_by_length)
        s += "simple_paths_len_" + std::to_string(k) + "," + std::to_string(v) + "\n";
    s += "special_cycles," + std::to_string(c.special_cycles) + "\n";
    s += "cycles_with_handle," + std::to_string(c.cycles_with_handle) + "\n";
    s += "spoiled_paths," + std::to_string(c.spoiled_paths) + "\n";
    s += "reduced_fano," + std::to_string(c.reduced_fano) + "\n";
    s += "saws," + std::to_string(c.saws) + "\n";
    s += "spoiled_extensions," + std::to_string(c.spoiled_extensions) + "\n";
    s += "nonsimple_covered_shorts," + std::to_string(c.nonsimple_covered_shorts) + "\n";
    return s;
}

struct SampleArgs {
    Vertex n = 0;
    double p = -1.0;  // < 0 means the full ground set
    std::uint64_t seed = 0;

    GroundSubset realize() const {
        if (p < 0) return GroundSubset::full(n);
        return random_subset({n, p, seed});
    }
    ordered_json echo() const {
        ordered_json j;
        j["n"] = n;
        if (p >= 0) {
            j["p"] = p;
            j["seed"] = seed;
        }
        return j;
    }
};

}  // namespace detail

inline int run_command(int argc, const char* const* argv) {
    CLI::App app{"Exact decision, certificates, and Monte Carlo sweeps for the Ramsey "
                 "property of random arithmetic-progression hypergraphs"};
    app.set_config("--config", "", "Config file (key = value, [subcommand] sections)");
    app.require_subcommand(1);

    std::string out_path, plot_path;
    std::string fmt_enum = "csv", fmt_decide = "json", fmt_census = "json", fmt_sweep = "csv",
                fmt_isolate = "csv";

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "List all q-APs contained in [n]");
    Vertex en_n = 0;
    int en_q = 3;
    cmd_enum->add_option("--n", en_n, "Ground set size")->required();
    cmd_enum->add_option("--q", en_q, "Progression length")->required()->check(CLI::Range(3, 64));
    cmd_enum->add_option("--out", out_path, "Output path (default stdout)");
    cmd_enum->add_option("--format", fmt_enum, "csv | json");

    // decide
    auto* cmd_decide = app.add_subcommand(
        "decide", "Decide the Ramsey property of [n] or a sampled subset");
    detail::SampleArgs de_sample;
    std::vector<int> de_lengths;
    std::uint64_t de_budget = 5'000'000;
    cmd_decide->add_option("--n", de_sample.n, "Ground set size")->required();
    cmd_decide->add_option("--lengths", de_lengths, "Progression lengths q1,q2,...")
        ->required()
        ->delimiter(',');
    cmd_decide->add_option("--p", de_sample.p, "Sampling probability (omit for full [n])");
    cmd_decide->add_option("--seed", de_sample.seed, "Sampling seed");
    cmd_decide->add_option("--budget", de_budget, "Search node budget");
    cmd_decide->add_option("--out", out_path, "Output path (default stdout)");
    cmd_decide->add_option("--format", fmt_decide, "json");

    // certify
    auto* cmd_certify = app.add_subcommand(
        "certify", "Decide and, when not colorable, extract a blocking certificate");
    detail::SampleArgs ce_sample;
    std::vector<int> ce_lengths;
    std::uint64_t ce_budget = 5'000'000;
    cmd_certify->add_option("--n", ce_sample.n, "Ground set size")->required();
    cmd_certify->add_option("--lengths", ce_lengths, "Two lengths q1,q2")
        ->required()
        ->delimiter(',');
    cmd_certify->add_option("--p", ce_sample.p, "Sampling probability (omit for full [n])");
    cmd_certify->add_option("--seed", ce_sample.seed, "Sampling seed");
    cmd_certify->add_option("--budget", ce_budget, "Search node budget");
    cmd_certify->add_option("--out", out_path, "Certificate path (default stdout)");

    // census
    auto* cmd_census = app.add_subcommand("census", "Configuration census of a sample");
    detail::SampleArgs cn_sample;
    std::vector<int> cn_lengths;
    int cn_max_len = 4;
    cmd_census->add_option("--n", cn_sample.n, "Ground set size")->required();
    cmd_census->add_option("--lengths", cn_lengths, "Progression lengths")
        ->required()
        ->delimiter(',');
    cmd_census->add_option("--p", cn_sample.p, "Sampling probability (omit for full [n])");
    cmd_census->add_option("--seed", cn_sample.seed, "Sampling seed");
    cmd_census->add_option("--max-len", cn_max_len, "Path length cutoff");
    cmd_census->add_option("--out", out_path, "Output path (default stdout)");
    cmd_census->add_option("--format", fmt_census, "csv | json");

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "Threshold sweep over an (n, c) grid");
    SweepConfig sw;
    std::vector<int> sw_lengths;
    cmd_sweep->add_option("--n-grid", sw.n_grid, "Ground set sizes")->required()->delimiter(',');
    cmd_sweep->add_option("--c-grid", sw.c_grid, "Multipliers of the threshold scale")
        ->required()
        ->delimiter(',');
    cmd_sweep->add_option("--lengths", sw_lengths, "Progression lengths q1,q2,...")
        ->required()
        ->delimiter(',');
    cmd_sweep->add_option("--trials", sw.trials, "Trials per (n, c) cell");
    cmd_sweep->add_option("--master-seed", sw.master_seed, "Master seed");
    cmd_sweep->add_option("--budget", sw.budget, "Per-trial solver budget");
    cmd_sweep->add_flag("--census", sw.collect_census, "Collect configuration censuses");
    cmd_sweep->add_option("--census-max-len", sw.census_max_len, "Census path cutoff");
    cmd_sweep->add_flag("--isolate", sw.collect_isolation, "Collect isolation statistics");
    cmd_sweep->add_option("--threads", sw.threads, "Worker threads (default: VDW_THREADS)");
    cmd_sweep->add_option("--out", out_path, "CSV output path (default stdout)");
    cmd_sweep->add_option("--plot", plot_path, "Optional SVG plot path");
    cmd_sweep->add_option("--format", fmt_sweep, "csv | json");

    // isolate
    auto* cmd_isolate = app.add_subcommand("isolate", "Isolation statistics of seeded samples");
    Vertex is_n = 0;
    int is_q1 = 4, is_q2 = 3, is_trials = 1;
    double is_p = -1.0, is_c = -1.0;
    std::uint64_t is_seed = 1;
    cmd_isolate->add_option("--n", is_n, "Ground set size")->required();
    cmd_isolate->add_option("--q1", is_q1, "Long progression length")->required();
    cmd_isolate->add_option("--q2", is_q2, "Short progression length")->required();
    auto* opt_p = cmd_isolate->add_option("--p", is_p, "Sampling probability");
    cmd_isolate->add_option("--c", is_c, "Multiplier of n^(-q2/(q1(q2-1)))")->excludes(opt_p);
    cmd_isolate->add_option("--seed", is_seed, "Master seed");
    cmd_isolate->add_option("--trials", is_trials, "Number of samples");
    cmd_isolate->add_option("--out", out_path, "Output path (default stdout)");
    cmd_isolate->add_option("--format", fmt_isolate, "csv | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_enum) {
            const auto aps = enumerate_aps(en_n, en_q);
            if (fmt_enum == "csv") {
                std::string s = "first,diff,length\n";
                for (const auto& ap : aps)
                    s += std::to_string(ap.first) + ',' + std::to_string(ap.diff) + ',' +
                         std::to_string(ap.length) + '\n';
                detail::deliver(s, out_path);
            } else {
                ordered_json payload = ordered_json::array();
                for (const auto& ap : aps) payload.push_back(ap_to_json(ap));
                ordered_json cfg;
                cfg["n"] = en_n;
                cfg["q"] = en_q;
                detail::deliver(
                    detail::envelope("enumerate", cfg, payload, kExitSuccess).dump(2) + "\n",
                    out_path);
            }
            return kExitSuccess;
        }

        if (*cmd_decide) {
            const ColorSpec spec(de_lengths);
            const auto subset = de_sample.realize();
            const auto t0 = std::chrono::steady_clock::now();
            const auto result = find_proper_coloring(subset, spec, de_budget);
            TrialRecord record;
            record.n = de_sample.n;
            record.p = de_sample.p < 0 ? 1.0 : de_sample.p;
            record.seed = de_sample.seed;
            record.subset_size = static_cast<std::int64_t>(subset.size());
            record.decision = result.outcome;
            record.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            const int status = result.outcome == Outcome::Colorable ? kExitSuccess
                               : result.outcome == Outcome::NotColorable ? kExitNotColorable
                                                                         : kExitIndeterminate;
            ordered_json payload;
            payload["outcome"] = to_string(record.decision);
            payload["n"] = record.n;
            payload["p"] = record.p;
            payload["seed"] = record.seed;
            payload["subset_size"] = record.subset_size;
            payload["nodes_used"] = result.nodes_used;
            payload["wall_seconds"] = record.wall_seconds;
            if (result.coloring) {
                ordered_json witness = ordered_json::array();
                for (const auto& [v, c] : result.coloring->assignment)
                    witness.push_back(ordered_json::array({v, c}));
                payload["witness"] = std::move(witness);
            }
            ordered_json cfg = de_sample.echo();
            cfg["lengths"] = de_lengths;
            cfg["budget"] = de_budget;
            detail::deliver(detail::envelope("decide", cfg, payload, status).dump(2) + "\n",
                            out_path);
            return status;
        }

        if (*cmd_certify) {
            const ColorSpec spec(ce_lengths);
            if (spec.colors() != 2) {
                std::cerr << "certify: exactly two lengths are supported\n";
                return kExitUsage;
            }
            const auto subset = ce_sample.realize();
            const auto result = find_proper_coloring(subset, spec, ce_budget);
            if (result.outcome == Outcome::Indeterminate) return kExitIndeterminate;
            if (result.outcome == Outcome::Colorable) {
                ordered_json payload;
                payload["outcome"] = to_string(result.outcome);
                payload["certificate"] = nullptr;
                ordered_json cfg = ce_sample.echo();
                cfg["lengths"] = ce_lengths;
                detail::deliver(
                    detail::envelope("certify", cfg, payload, kExitSuccess).dump(2) + "\n",
                    out_path);
                return kExitSuccess;
            }
            const int q1 = spec.lengths[0], q2 = spec.lengths[1];
            ordered_json cert_json;
            if (q1 == q2) {
                const auto h = induced_hypergraph(subset, {q1});
                const auto cert = extract_blocking_sym(h, ce_budget);
                cert_json = certificate_to_json(cert, h);
            } else {
                const auto h = induced_hypergraph(subset, {q1, q2});
                const auto cert = extract_blocking_asym(h, ce_budget);
                cert_json = certificate_to_json(cert, h);
            }
            detail::deliver(cert_json.dump(2) + "\n", out_path);
            return kExitNotColorable;
        }

        if (*cmd_census) {
            const ColorSpec spec(cn_lengths);
            const auto subset = cn_sample.realize();
            const auto record = configuration_census(subset, spec, cn_max_len);
            if (fmt_census == "csv") {
                detail::deliver(detail::census_to_csv(record), out_path);
            } else {
                ordered_json cfg = cn_sample.echo();
                cfg["lengths"] = cn_lengths;
                cfg["max_len"] = cn_max_len;
                detail::deliver(detail::envelope("census", cfg,
                                                 detail::census_to_json(record), kExitSuccess)
                                        .dump(2) +
                                    "\n",
                                out_path);
            }
            return kExitSuccess;
        }

        if (*cmd_sweep) {
            sw.spec = ColorSpec(sw_lengths);
            const auto rows = threshold_sweep(sw);
            if (!plot_path.empty()) atomic_write_text(plot_path, svg_sweep_plot(rows));
            if (fmt_sweep == "json") {
                ordered_json payload = ordered_json::array();
                for (const auto& r : rows) {
                    ordered_json j;
                    j["n"] = r.n;
                    j["c"] = r.c;
                    j["p"] = r.p;
                    j["trials"] = r.trials;
                    j["successes"] = r.successes;
                    j["indeterminate"] = r.indeterminate;
                    j["phat"] = r.phat;
                    j["ci_low"] = r.ci_low;
                    j["ci_high"] = r.ci_high;
                    j["failed"] = r.failed;
                    j["mean_subset_size"] = r.mean(r.sum_subset_size);
                    j["mean_special_cycles"] = r.mean(r.sum_special_cycles);
                    j["mean_cycles_with_handle"] = r.mean(r.sum_cycles_with_handle);
                    j["mean_spoiled_paths"] = r.mean(r.sum_spoiled_paths);
                    j["mean_reduced_fano"] = r.mean(r.sum_reduced_fano);
                    j["mean_saws"] = r.mean(r.sum_saws);
                    j["mean_spoiled_extensions"] = r.mean(r.sum_spoiled_extensions);
                    j["mean_nonsimple_covers"] = r.mean(r.sum_nonsimple_covers);
                    j["mean_isolation_excess"] = r.mean(r.sum_isolation_excess);
                    j["mostly_independent_count"] = r.mostly_independent_count;
                    payload.push_back(std::move(j));
                }
                ordered_json cfg;
                cfg["n_grid"] = sw.n_grid;
                cfg["c_grid"] = sw.c_grid;
                cfg["lengths"] = sw_lengths;
                cfg["trials"] = sw.trials;
                cfg["master_seed"] = sw.master_seed;
                detail::deliver(
                    detail::envelope("sweep", cfg, payload, kExitSuccess).dump(2) + "\n",
                    out_path);
            } else {
                detail::deliver(sweep_rows_to_csv(rows), out_path);
            }
            return kExitSuccess;
        }

        if (*cmd_isolate) {
            if (is_p < 0 && is_c < 0) {
                std::cerr << "isolate: one of --p or --c is required\n";
                return kExitUsage;
            }
            const double p =
                is_p >= 0 ? is_p : p_from_c(is_c, is_n, ColorSpec({is_q1, is_q2}));
            std::string csv =
                "n,q1,q2,p,trial,seed,subset_size,q_size,qi_size,excess,threshold,mostly_"
                "independent\n";
            ordered_json payload = ordered_json::array();
            for (int t = 0; t < is_trials; ++t) {
                const std::uint64_t seed =
                    trial_seed(is_seed, is_n, 0, static_cast<std::uint64_t>(t));
                const auto subset = random_subset({is_n, p, seed});
                const auto stats = isolation_stats(subset, is_q1, is_q2);
                csv += std::to_string(is_n) + ',' + std::to_string(is_q1) + ',' +
                       std::to_string(is_q2) + ',' + fixed6(p) + ',' + std::to_string(t) + ',' +
                       std::to_string(seed) + ',' + std::to_string(subset.size()) + ',' +
                       std::to_string(stats.q_size) + ',' + std::to_string(stats.qi_size) + ',' +
                       std::to_string(stats.excess()) + ',' + fixed6(stats.threshold_value) +
                       ',' + (stats.mostly_independent ? "1" : "0") + '\n';
                ordered_json j;
                j["trial"] = t;
                j["seed"] = seed;
                j["subset_size"] = subset.size();
                j["q_size"] = stats.q_size;
                j["qi_size"] = stats.qi_size;
                j["excess"] = stats.excess();
                j["threshold"] = stats.threshold_value;
                j["mostly_independent"] = stats.mostly_independent;
                payload.push_back(std::move(j));
            }
            if (fmt_isolate == "csv") {
                detail::deliver(csv, out_path);
            } else {
                ordered_json cfg;
                cfg["n"] = is_n;
                cfg["q1"] = is_q1;
                cfg["q2"] = is_q2;
                cfg["p"] = p;
                cfg["seed"] = is_seed;
                cfg["trials"] = is_trials;
                detail::deliver(
                    detail::envelope("isolate", cfg, payload, kExitSuccess).dump(2) + "\n",
                    out_path);
            }
            return kExitSuccess;
        }
    } catch (const budget_exhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitIndeterminate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace cli
}  // namespace vdw
