#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crn/matching.hpp"
#include "crn/metrics.hpp"
#include "crn/preferences.hpp"
#include "crn/rng.hpp"
#include "crn/scenario.hpp"

namespace crn {

struct AlgorithmSet {
    bool proposed = true;
    bool deferred_acceptance = true;
    bool random = true;

    bool contains(Algorithm a) const;
    // Comma-separated names, or "all". Throws std::invalid_argument on an
    // unknown name or an empty selection.
    static AlgorithmSet parse(const std::string& spec);
    std::string to_string() const;
};

struct TrialOptions {
    AlgorithmSet algorithms{};
    std::uint64_t base_seed = 1;
    bool verify_stability = false;
    ProposalOrder proposal_order = ProposalOrder::ascending_delta;
    const PuUtility* utility = nullptr;  // null selects the default 1-exp(-v)
};

struct TrialResult {
    std::optional<TrialMetrics> proposed;
    std::optional<TrialMetrics> deferred_acceptance;
    std::optional<TrialMetrics> random;
    bool stability_checked = false;
    bool stability_ok = true;

    bool operator==(const TrialResult&) const = default;
};

const PuUtility& default_pu_utility();

// Independent per-trial streams, derived from (base_seed, trial_index).
struct TrialSeeds {
    std::uint64_t geometry;
    std::uint64_t noise;
    std::uint64_t band_choice;
};
TrialSeeds trial_seeds(std::uint64_t base_seed, std::uint64_t trial_index);

// One Monte Carlo trial: sample an instance and a sensing snapshot, then run
// every requested algorithm on that same draw (paired comparison). The
// geometry, noise, and band-choice streams are derived from
// (base_seed, trial_index) independently, so trials can execute in any order.
TrialResult run_trial(const ScenarioConfig& scenario, const TrialOptions& opt,
                      std::uint64_t trial_index);

enum class OutputFormat { csv, json };

struct SweepConfig {
    ScenarioConfig scenario;  // dimensions are overridden per sweep cell
    std::vector<int> m_values = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<int> n_values = {3, 4};
    std::int64_t trials = 100000;
    AlgorithmSet algorithms{};
    std::uint64_t base_seed = 1;
    std::string output_path = "results.csv";
    OutputFormat format = OutputFormat::csv;
    bool verify_stability = false;
    ProposalOrder proposal_order = ProposalOrder::ascending_delta;

    void validate() const;
};

struct MetricStats {
    double mean = 0.0;
    double std_error = 0.0;

    bool operator==(const MetricStats&) const = default;
};

// Aggregates for one (M, N, algorithm) sweep cell.
struct CellStats {
    int m = 0;
    int n = 0;
    Algorithm algorithm = Algorithm::proposed;
    std::int64_t trials = 0;
    MetricStats sum_rate;
    MetricStats min_rate;
    MetricStats num_matched;
    MetricStats proposal_count;
    MetricStats rounds;

    bool operator==(const CellStats&) const = default;
};

struct SweepSummary {
    std::vector<CellStats> cells;

    const CellStats* find(int m, int n, Algorithm a) const;
    bool operator==(const SweepSummary&) const = default;
};

enum class RunMode { serial, parallel };

// Runs every (M, N) cell for the requested trial count. In parallel mode the
// trials of a cell are spread across OpenMP threads; each trial writes its own
// slot and the reduction always runs serially in trial order, so the summary
// is bit-identical to the serial mode regardless of thread count.
SweepSummary run_sweep(const SweepConfig& sweep, RunMode mode = RunMode::parallel);

// Aggregation used per cell; exposed for tests.
CellStats summarize_cell(int m, int n, Algorithm a, const std::vector<TrialMetrics>& metrics);

// Randomized scenario for stability fuzzing: moderate sensing SNR so that
// detections are genuinely uncertain, mixed PU activity, per-pair priors.
ScenarioConfig fuzz_scenario_config(Rng& rng, int num_sus, int num_pus);

}  // namespace crn
