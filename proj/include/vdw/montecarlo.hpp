#pragma once

// Seeded trial orchestration: Ramsey-probability estimation with Wilson
// intervals, threshold sweeps over (n, c) grids, isolation statistics, and
// per-sample configuration censuses. Trials are embarrassingly parallel;
// aggregation uses exact integer sums so results do not depend on the worker
// schedule.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "vdw/ap.hpp"
#include "vdw/blocking_asym.hpp"
#include "vdw/blocking_sym.hpp"
#include "vdw/colorability.hpp"
#include "vdw/hypergraph.hpp"
#include "vdw/rng.hpp"

namespace vdw {

/// p = c * n^(-q2 / (q1 (q2-1))); the symmetric case degenerates to the
/// classical exponent 1/(q-1).
inline double threshold_exponent(int q1, int q2) {
    if (q1 < 3 || q2 < 3 || q2 > q1) throw std::invalid_argument("threshold_exponent: bad lengths");
    return static_cast<double>(q2) / (static_cast<double>(q1) * (q2 - 1));
}

inline double threshold_exponent(const ColorSpec& spec) {
    const int q1 = spec.lengths[0];
    const int q2 = spec.colors() >= 2 ? spec.lengths[1] : q1;
    return threshold_exponent(q1, q2);
}

inline double p_from_c(double c, Vertex n, const ColorSpec& spec) {
    const double p = c * std::pow(static_cast<double>(n), -threshold_exponent(spec));
    return std::min(1.0, std::max(0.0, p));
}

/// Per-trial stream key: master seed refined by n, grid cell, and trial
/// index through the SplitMix64 finalizer.
inline std::uint64_t trial_seed(std::uint64_t master, Vertex n, std::uint64_t cell,
                                std::uint64_t trial) {
    return rng::derive(rng::derive(rng::derive(master, static_cast<std::uint64_t>(n)), cell),
                       trial);
}

inline int default_thread_count() {
    if (const char* env = std::getenv("VDW_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Wilson score interval at 95% confidence.
struct WilsonInterval {
    double low = 0.0, high = 1.0;
};

inline WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials) {
    if (trials <= 0) return {0.0, 1.0};
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

/// |Q|, |Q_I| and the mostly-independent verdict for the q1-APs of a sample:
/// Q is the union of all q1-APs inside the subset, Q_I the union of the
/// isolated ones, delta = min{q2, q1-q2} / (2 q1 (q2-1)), and Q is mostly
/// independent when |Q \ Q_I| < n^(1 - 1/(q2-1) - delta).
struct IsolationStats {
    std::int64_t q_size = 0;
    std::int64_t qi_size = 0;
    double delta = 0.0;
    double threshold_value = 0.0;
    bool mostly_independent = true;

    std::int64_t excess() const { return q_size - qi_size; }
};

inline IsolationStats isolation_stats(const GroundSubset& subset, int q1, int q2) {
    if (!(q1 > q2 && q2 >= 3))
        throw std::invalid_argument("isolation_stats: need q1 > q2 >= 3");
    const auto aps = aps_in_subset(subset, q1);

    // An AP is isolated iff every one of its vertices lies in no other q1-AP.
    std::map<Vertex, int> incidence;
    for (const auto& ap : aps)
        for (Vertex v : ap.elements()) ++incidence[v];
    std::set<Vertex> q_union, qi_union;
    for (const auto& ap : aps) {
        bool isolated = true;
        for (Vertex v : ap.elements()) {
            q_union.insert(v);
            if (incidence[v] > 1) isolated = false;
        }
        if (isolated)
            for (Vertex v : ap.elements()) qi_union.insert(v);
    }

    IsolationStats out;
    out.q_size = static_cast<std::int64_t>(q_union.size());
    out.qi_size = static_cast<std::int64_t>(qi_union.size());
    out.delta = static_cast<double>(std::min(q2, q1 - q2)) /
                (2.0 * static_cast<double>(q1) * (q2 - 1));
    out.threshold_value =
        std::pow(static_cast<double>(subset.n), 1.0 - 1.0 / (q2 - 1) - out.delta);
    out.mostly_independent = static_cast<double>(out.excess()) < out.threshold_value;
    return out;
}

/// Counts of the configuration-census observables of one sample.
struct CensusRecord {
    std::map<int, std::int64_t> ap_counts;         // by progression length
    std::map<int, std::int64_t> q1_pair_overlaps;  // intersecting q1-AP pairs by overlap
    std::map<int, std::int64_t> simple_paths_by_length;
    std::int64_t special_cycles = 0;
    std::int64_t cycles_with_handle = 0;
    std::int64_t spoiled_paths = 0;
    std::int64_t reduced_fano = 0;
    std::int64_t saws = 0;
    std::int64_t spoiled_extensions = 0;
    std::int64_t nonsimple_covered_shorts = 0;
};

inline CensusRecord configuration_census(const GroundSubset& subset, const ColorSpec& spec,
                                         int max_len) {
    CensusRecord out;
    std::vector<int> lengths = spec.lengths;
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

    const int q1 = lengths[0];
    std::map<int, std::vector<ArithmeticProgression>> by_length;
    for (int q : lengths) by_length[q] = aps_in_subset(subset, q);
    for (int q : lengths)
        out.ap_counts[q] = static_cast<std::int64_t>(by_length[q].size());

    const auto& q1_aps = by_length[q1];
    for (std::size_t i = 0; i < q1_aps.size(); ++i)
        for (std::size_t j = i + 1; j < q1_aps.size(); ++j) {
            const int m = static_cast<int>(ap_intersection(q1_aps[i], q1_aps[j]).size());
            if (m >= 1) ++out.q1_pair_overlaps[m];
        }

    const auto h = induced_hypergraph(subset, lengths);
    if (lengths.size() == 1) {
        const auto c = census_sym(h, max_len);
        out.simple_paths_by_length = c.simple_paths_by_length;
        out.special_cycles = c.special_cycles;
        out.cycles_with_handle = c.cycles_with_handle;
        out.spoiled_paths = c.spoiled_paths;
        out.reduced_fano = c.reduced_fano;
    } else {
        const auto c = census_asym(h, max_len);
        out.simple_paths_by_length = c.simple_paths_by_length;
        out.saws = c.saws;
        out.spoiled_paths = c.spoiled_paths;
        out.spoiled_extensions = c.spoiled_extensions;
        out.nonsimple_covered_shorts = c.nonsimple_covered_shorts;
    }
    return out;
}

/// One decided sample, as surfaced by the command-line tools.
struct TrialRecord {
    Vertex n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::int64_t subset_size = 0;
    Outcome decision = Outcome::Indeterminate;
    std::optional<std::string> certificate_kind;
    std::optional<CensusRecord> census;
    double wall_seconds = 0.0;
};

struct ProbabilityEstimate {
    int trials = 0;
    int successes = 0;      // samples where the Ramsey property holds
    int indeterminate = 0;  // excluded from phat
    double phat = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    double indeterminate_rate = 0.0;
};

namespace detail_mc {

/// Run one job per index on a small pool; results land by index, so the
/// aggregate is schedule-independent.
template <typename Fn>
void parallel_for(int jobs, int threads, Fn fn) {
    if (jobs <= 0) return;
    threads = std::max(1, std::min(threads, jobs));
    if (threads == 1) {
        for (int i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace detail_mc

/// Estimate P([n]_p -> (q_1, ..., q_r)) over seeded independent samples. The
/// estimate is the NotColorable fraction of decided trials; Indeterminate
/// trials are excluded and reported. Identical inputs give identical outputs
/// regardless of thread count.
inline ProbabilityEstimate ramsey_probability(Vertex n, const ColorSpec& spec, double p,
                                              int trials, std::uint64_t master_seed,
                                              std::uint64_t budget, int threads = 0,
                                              std::uint64_t cell = 0) {
    if (trials < 1) throw std::invalid_argument("ramsey_probability: trials must be >= 1");
    if (threads <= 0) threads = default_thread_count();

    std::vector<Outcome> outcomes(static_cast<std::size_t>(trials), Outcome::Indeterminate);
    detail_mc::parallel_for(trials, threads, [&](int t) {
        const auto subset =
            random_subset({n, p, trial_seed(master_seed, n, cell, static_cast<std::uint64_t>(t))});
        outcomes[static_cast<std::size_t>(t)] = find_proper_coloring(subset, spec, budget).outcome;
    });

    ProbabilityEstimate est;
    est.trials = trials;
    for (Outcome o : outcomes) {
        if (o == Outcome::NotColorable) ++est.successes;
        if (o == Outcome::Indeterminate) ++est.indeterminate;
    }
    const int decided = trials - est.indeterminate;
    est.indeterminate_rate = static_cast<double>(est.indeterminate) / trials;
    if (decided == 0)
        throw std::runtime_error("ramsey_probability: every trial exhausted its budget");
    est.phat = static_cast<double>(est.successes) / decided;
    const auto ci = wilson_interval(est.successes, decided);
    est.ci_low = ci.low;
    est.ci_high = ci.high;
    return est;
}

struct SweepConfig {
    std::vector<Vertex> n_grid;
    ColorSpec spec;
    std::vector<double> c_grid;
    int trials = 100;
    std::uint64_t master_seed = 1;
    std::uint64_t budget = 5'000'000;
    bool collect_census = false;
    int census_max_len = 4;
    bool collect_isolation = false;
    int threads = 0;

    void validate() const {
        if (n_grid.empty() || c_grid.empty())
            throw std::invalid_argument("SweepConfig: empty grid");
        if (trials < 1) throw std::invalid_argument("SweepConfig: trials must be >= 1");
        for (double c : c_grid)
            if (c < 0) throw std::invalid_argument("SweepConfig: c must be >= 0");
    }
};

/// One (n, c) cell. Census and isolation aggregates are exact integer sums
/// over the cell's trials.
struct SweepRow {
    Vertex n = 0;
    int q1 = 3, q2 = 3, r = 2;
    double c = 0.0, p = 0.0;
    int trials = 0, successes = 0, indeterminate = 0;
    double phat = 0.0, ci_low = 0.0, ci_high = 1.0;
    std::uint64_t master_seed = 0;
    bool failed = false;  // every trial indeterminate

    std::int64_t sum_subset_size = 0;
    std::int64_t sum_special_cycles = 0;
    std::int64_t sum_cycles_with_handle = 0;
    std::int64_t sum_spoiled_paths = 0;
    std::int64_t sum_reduced_fano = 0;
    std::int64_t sum_saws = 0;
    std::int64_t sum_spoiled_extensions = 0;
    std::int64_t sum_nonsimple_covers = 0;
    std::int64_t sum_isolation_excess = 0;
    std::int64_t mostly_independent_count = 0;

    double mean(std::int64_t sum) const {
        return trials == 0 ? 0.0 : static_cast<double>(sum) / trials;
    }
};

/// Sweep the (n, c) grid at p = c * n^(-q2/(q1(q2-1))). One row per cell in
/// (n asc, c asc) order; per-cell failures are flagged, never fatal.
inline std::vector<SweepRow> threshold_sweep(const SweepConfig& config) {
    config.validate();
    const int q1 = config.spec.lengths[0];
    const int q2 = config.spec.colors() >= 2 ? config.spec.lengths[1] : q1;
    const bool isolation = config.collect_isolation && q1 > q2;
    const int threads = config.threads > 0 ? config.threads : default_thread_count();

    std::vector<SweepRow> rows;
    auto n_grid = config.n_grid;
    std::sort(n_grid.begin(), n_grid.end());
    auto c_grid = config.c_grid;
    std::sort(c_grid.begin(), c_grid.end());

    for (Vertex n : n_grid) {
        for (std::size_t ci = 0; ci < c_grid.size(); ++ci) {
            const double c = c_grid[ci];
            SweepRow row;
            row.n = n;
            row.q1 = q1;
            row.q2 = q2;
            row.r = config.spec.colors();
            row.c = c;
            row.p = p_from_c(c, n, config.spec);
            row.trials = config.trials;
            row.master_seed = config.master_seed;

            struct TrialOut {
                Outcome outcome = Outcome::Indeterminate;
                std::int64_t subset_size = 0;
                CensusRecord census;
                std::int64_t isolation_excess = 0;
                bool mostly_independent = false;
            };
            std::vector<TrialOut> outs(static_cast<std::size_t>(config.trials));
            detail_mc::parallel_for(config.trials, threads, [&](int t) {
                auto& out = outs[static_cast<std::size_t>(t)];
                const auto subset = random_subset(
                    {n, row.p,
                     trial_seed(config.master_seed, n, ci, static_cast<std::uint64_t>(t))});
                out.subset_size = static_cast<std::int64_t>(subset.size());
                out.outcome = find_proper_coloring(subset, config.spec, config.budget).outcome;
                if (config.collect_census)
                    out.census = configuration_census(subset, config.spec, config.census_max_len);
                if (isolation) {
                    const auto iso = isolation_stats(subset, q1, q2);
                    out.isolation_excess = iso.excess();
                    out.mostly_independent = iso.mostly_independent;
                }
            });

            for (const auto& out : outs) {
                if (out.outcome == Outcome::NotColorable) ++row.successes;
                if (out.outcome == Outcome::Indeterminate) ++row.indeterminate;
                row.sum_subset_size += out.subset_size;
                row.sum_special_cycles += out.census.special_cycles;
                row.sum_cycles_with_handle += out.census.cycles_with_handle;
                row.sum_spoiled_paths += out.census.spoiled_paths;
                row.sum_reduced_fano += out.census.reduced_fano;
                row.sum_saws += out.census.saws;
                row.sum_spoiled_extensions += out.census.spoiled_extensions;
                row.sum_nonsimple_covers += out.census.nonsimple_covered_shorts;
                row.sum_isolation_excess += out.isolation_excess;
                if (out.mostly_independent) ++row.mostly_independent_count;
            }
            const int decided = row.trials - row.indeterminate;
            if (decided == 0) {
                row.failed = true;
                row.phat = 0.0;
                row.ci_low = 0.0;
                row.ci_high = 0.0;
            } else {
                row.phat = static_cast<double>(row.successes) / decided;
                const auto wi = wilson_interval(row.successes, decided);
                row.ci_low = wi.low;
                row.ci_high = wi.high;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace vdw
