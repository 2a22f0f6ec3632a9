#include "crn/harness.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace crn {

namespace {

// Seed-stream tags for the independent per-trial random sequences.
constexpr std::uint64_t kGeometryStream = 0;
constexpr std::uint64_t kNoiseStream = 1;
constexpr std::uint64_t kBandChoiceStream = 2;

}  // namespace

bool AlgorithmSet::contains(Algorithm a) const {
    switch (a) {
        case Algorithm::proposed: return proposed;
        case Algorithm::deferred_acceptance: return deferred_acceptance;
        case Algorithm::random: return random;
    }
    return false;
}

AlgorithmSet AlgorithmSet::parse(const std::string& spec) {
    AlgorithmSet set{false, false, false};
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "all") {
            set = AlgorithmSet{};
        } else if (token == "proposed") {
            set.proposed = true;
        } else if (token == "deferred_acceptance") {
            set.deferred_acceptance = true;
        } else if (token == "random") {
            set.random = true;
        } else {
            throw std::invalid_argument("unknown algorithm '" + token + "'");
        }
    }
    if (!set.proposed && !set.deferred_acceptance && !set.random)
        throw std::invalid_argument("algorithm selection is empty");
    return set;
}

std::string AlgorithmSet::to_string() const {
    std::string out;
    const auto add = [&out](std::string_view name) {
        if (!out.empty()) out += ',';
        out += name;
    };
    if (proposed) add(algorithm_name(Algorithm::proposed));
    if (deferred_acceptance) add(algorithm_name(Algorithm::deferred_acceptance));
    if (random) add(algorithm_name(Algorithm::random));
    return out;
}

const PuUtility& default_pu_utility() {
    static const PuUtility utility = PuUtility::saturating_exponential();
    return utility;
}

TrialSeeds trial_seeds(std::uint64_t base_seed, std::uint64_t trial_index) {
    return {derive_seed(base_seed, trial_index, kGeometryStream),
            derive_seed(base_seed, trial_index, kNoiseStream),
            derive_seed(base_seed, trial_index, kBandChoiceStream)};
}

TrialResult run_trial(const ScenarioConfig& scenario, const TrialOptions& opt,
                      std::uint64_t trial_index) {
    scenario.validate();
    const PuUtility& utility = opt.utility ? *opt.utility : default_pu_utility();
    const TrialSeeds seeds = trial_seeds(opt.base_seed, trial_index);

    const NetworkInstance inst = sample_instance(scenario, seeds.geometry);
    const ObservationMatrix obs = sample_observations(scenario, inst, seeds.noise);
    const DetectionMatrix det = detection_matrix(scenario, inst, obs);
    const Matrix eta = rate_matrix(scenario, inst);

    TrialResult result;
    const auto matching_metrics = [&](Algorithm tag, const Matching& matching) {
        const RateSummary rs = matched_sum_and_min(matching, eta);
        TrialMetrics tm;
        tm.algorithm = tag;
        tm.sum_rate = rs.sum_rate;
        tm.min_rate = rs.min_rate;
        tm.num_matched = rs.num_matched;
        tm.proposal_count = matching.proposal_count;
        tm.rounds = matching.rounds;
        return tm;
    };

    if (opt.algorithms.proposed) {
        const ProposalTable table =
            build_preferences(det, eta, scenario.alpha, true, opt.proposal_order);
        const Matching matching = run_algorithm1(table, utility, inst.pu_active);
        result.proposed = matching_metrics(Algorithm::proposed, matching);
        if (opt.verify_stability) {
            result.stability_checked = true;
            result.stability_ok = is_stable(matching, table, utility, inst.pu_active).stable;
        }
    }
    if (opt.algorithms.deferred_acceptance) {
        const ProposalTable full =
            build_preferences(det, eta, scenario.alpha, false, opt.proposal_order);
        const Matching matching = run_deferred_acceptance(full, utility, inst.pu_active);
        result.deferred_acceptance = matching_metrics(Algorithm::deferred_acceptance, matching);
    }
    if (opt.algorithms.random) {
        const std::vector<int> choices = run_random_allocation(scenario, inst, seeds.band_choice);
        const RandomRates rr = random_allocation_rates(scenario, inst, choices);
        TrialMetrics tm;
        tm.algorithm = Algorithm::random;
        tm.sum_rate = rr.sum_rate;
        tm.min_rate = rr.min_rate;
        tm.num_matched = scenario.num_sus;
        result.random = tm;
    }
    return result;
}

void SweepConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("sweep config: trials must be >= 1");
    if (m_values.empty()) throw std::invalid_argument("sweep config: m_values is empty");
    if (n_values.empty()) throw std::invalid_argument("sweep config: n_values is empty");
    for (int m : m_values)
        if (m < 1) throw std::invalid_argument("sweep config: every m must be >= 1");
    for (int n : n_values)
        if (n < 1) throw std::invalid_argument("sweep config: every n must be >= 1");
}

const CellStats* SweepSummary::find(int m, int n, Algorithm a) const {
    for (const auto& cell : cells)
        if (cell.m == m && cell.n == n && cell.algorithm == a) return &cell;
    return nullptr;
}

namespace {

// Plain mean and standard error of the mean, accumulated in trial order so
// the result does not depend on how trials were scheduled.
MetricStats aggregate(const std::vector<double>& values) {
    MetricStats stats;
    const std::size_t count = values.size();
    if (count == 0) return stats;
    double sum = 0.0;
    for (double v : values) sum += v;
    stats.mean = sum / static_cast<double>(count);
    if (count > 1) {
        double ss = 0.0;
        for (double v : values) {
            const double d = v - stats.mean;
            ss += d * d;
        }
        stats.std_error =
            std::sqrt(ss / (static_cast<double>(count) * static_cast<double>(count - 1)));
    }
    return stats;
}

}  // namespace

CellStats summarize_cell(int m, int n, Algorithm a, const std::vector<TrialMetrics>& metrics) {
    CellStats cell;
    cell.m = m;
    cell.n = n;
    cell.algorithm = a;
    cell.trials = static_cast<std::int64_t>(metrics.size());

    std::vector<double> values(metrics.size());
    const auto stats_of = [&](auto field) {
        for (std::size_t i = 0; i < metrics.size(); ++i)
            values[i] = static_cast<double>(field(metrics[i]));
        return aggregate(values);
    };
    cell.sum_rate = stats_of([](const TrialMetrics& t) { return t.sum_rate; });
    cell.min_rate = stats_of([](const TrialMetrics& t) { return t.min_rate; });
    cell.num_matched = stats_of([](const TrialMetrics& t) { return t.num_matched; });
    cell.proposal_count = stats_of([](const TrialMetrics& t) { return t.proposal_count; });
    cell.rounds = stats_of([](const TrialMetrics& t) { return t.rounds; });
    return cell;
}

SweepSummary run_sweep(const SweepConfig& sweep, RunMode mode) {
    sweep.validate();

    SweepSummary summary;
    for (int m : sweep.m_values) {
        for (int n : sweep.n_values) {
            ScenarioConfig cell_cfg = sweep.scenario;
            cell_cfg.num_sus = m;
            cell_cfg.num_pus = n;
            cell_cfg.apply_defaults();
            cell_cfg.validate();

            TrialOptions opt;
            opt.algorithms = sweep.algorithms;
            opt.base_seed = sweep.base_seed;
            opt.verify_stability = sweep.verify_stability;
            opt.proposal_order = sweep.proposal_order;

            const std::int64_t trials = sweep.trials;
            std::vector<TrialResult> results(static_cast<std::size_t>(trials));
            std::string error;

            if (mode == RunMode::parallel) {
#pragma omp parallel for schedule(static)
                for (std::int64_t t = 0; t < trials; ++t) {
                    try {
                        results[static_cast<std::size_t>(t)] =
                            run_trial(cell_cfg, opt, static_cast<std::uint64_t>(t));
                    } catch (const std::exception& e) {
#pragma omp critical
                        if (error.empty()) error = e.what();
                    }
                }
            } else {
                for (std::int64_t t = 0; t < trials; ++t) {
                    results[static_cast<std::size_t>(t)] =
                        run_trial(cell_cfg, opt, static_cast<std::uint64_t>(t));
                }
            }
            if (!error.empty())
                throw std::runtime_error("sweep cell (m=" + std::to_string(m) +
                                         ", n=" + std::to_string(n) + "): " + error);

            if (sweep.verify_stability) {
                for (std::int64_t t = 0; t < trials; ++t) {
                    const auto& r = results[static_cast<std::size_t>(t)];
                    if (r.stability_checked && !r.stability_ok)
                        throw std::runtime_error(
                            "unstable matching at cell (m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + "), trial " + std::to_string(t));
                }
            }

            const auto collect = [&results](std::optional<TrialMetrics> TrialResult::*field) {
                std::vector<TrialMetrics> metrics;
                metrics.reserve(results.size());
                for (const auto& r : results)
                    if (r.*field) metrics.push_back(*(r.*field));
                return metrics;
            };
            if (sweep.algorithms.proposed)
                summary.cells.push_back(
                    summarize_cell(m, n, Algorithm::proposed, collect(&TrialResult::proposed)));
            if (sweep.algorithms.deferred_acceptance)
                summary.cells.push_back(summarize_cell(m, n, Algorithm::deferred_acceptance,
                                                       collect(&TrialResult::deferred_acceptance)));
            if (sweep.algorithms.random)
                summary.cells.push_back(
                    summarize_cell(m, n, Algorithm::random, collect(&TrialResult::random)));
        }
    }
    return summary;
}

ScenarioConfig fuzz_scenario_config(Rng& rng, int num_sus, int num_pus) {
    ScenarioConfig cfg;
    cfg.num_sus = num_sus;
    cfg.num_pus = num_pus;
    cfg.area_side = 100.0;
    cfg.su_tx_power_dbm = rng.uniform(0.0, 20.0);
    cfg.pu_tx_power_dbm = rng.uniform(0.0, 15.0);
    // Noise high enough that sensing decisions stay genuinely noisy.
    cfg.noise_dbm = rng.uniform(-55.0, -35.0);
    cfg.link_radius = rng.uniform(2.0, 20.0);
    cfg.priors = Matrix(num_sus, num_pus);
    for (int m = 0; m < num_sus; ++m)
        for (int n = 0; n < num_pus; ++n) cfg.priors(m, n) = rng.uniform(0.05, 0.95);
    cfg.alpha.resize(static_cast<std::size_t>(num_sus));
    for (auto& a : cfg.alpha) a = rng.uniform01();
    cfg.truth_activity.resize(static_cast<std::size_t>(num_pus));
    for (int n = 0; n < num_pus; ++n) cfg.truth_activity[n] = rng.uniform01() < 0.35;
    return cfg;
}

}  // namespace crn
