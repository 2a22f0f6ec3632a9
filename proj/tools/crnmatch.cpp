// crnmatch: Monte Carlo driver for the spectrum-association simulator.
//
//   crnmatch sweep   run a full (M, N) sweep and write plot-ready results
//   crnmatch trial   run one trial verbosely, tracing every proposal
//   crnmatch verify  fuzz the matching engine against the stability oracle

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "crn/config_io.hpp"
#include "crn/harness.hpp"
#include "crn/matching.hpp"
#include "crn/metrics.hpp"
#include "crn/results_io.hpp"

using namespace crn;

namespace {

struct CommonFlags {
    std::string config_path;
    std::string m_spec;
    std::string n_spec;
    std::optional<long long> trials;
    std::optional<unsigned long long> seed;
    std::string algorithms;
    std::string out;
    std::string format;
    bool verify_stability = false;
    std::optional<double> alpha;
    std::optional<double> link_radius;
    std::string beta_range;
    int threads = 0;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "config file (key=value or JSON)");
    cmd->add_option("--m", flags.m_spec, "SU counts, e.g. 2..10 or 4,6,8");
    cmd->add_option("--n", flags.n_spec, "PU counts, e.g. 3,4");
    cmd->add_option("--trials", flags.trials, "Monte Carlo trials per cell");
    cmd->add_option("--seed", flags.seed, "base RNG seed");
    cmd->add_option("--algorithms", flags.algorithms,
                    "comma list of proposed,deferred_acceptance,random (or all)");
    cmd->add_option("--out", flags.out, "output file path");
    cmd->add_option("--format", flags.format, "output format: csv or json");
    cmd->add_flag("--verify-stability", flags.verify_stability,
                  "assert stability of every proposed-algorithm matching");
    cmd->add_option("--alpha", flags.alpha, "SU utility weight in [0,1]");
    cmd->add_option("--link-radius", flags.link_radius, "SU receiver disk radius, meters");
    cmd->add_option("--beta-range", flags.beta_range, "band coefficient range lo:hi");
    cmd->add_option("--threads", flags.threads, "OpenMP thread count (0 = default)");
}

SweepConfig merge_config(const CommonFlags& flags) {
    SweepConfig cfg;
    if (!flags.config_path.empty()) cfg = load_sweep_config(flags.config_path);
    if (!flags.m_spec.empty()) cfg.m_values = parse_int_list(flags.m_spec);
    if (!flags.n_spec.empty()) cfg.n_values = parse_int_list(flags.n_spec);
    if (flags.trials) cfg.trials = *flags.trials;
    if (flags.seed) cfg.base_seed = *flags.seed;
    if (!flags.algorithms.empty()) cfg.algorithms = AlgorithmSet::parse(flags.algorithms);
    if (!flags.out.empty()) cfg.output_path = flags.out;
    if (!flags.format.empty()) cfg.format = parse_output_format(flags.format);
    if (flags.verify_stability) cfg.verify_stability = true;
    if (flags.alpha) cfg.scenario.alpha_default = *flags.alpha;
    if (flags.link_radius) cfg.scenario.link_radius = *flags.link_radius;
    if (!flags.beta_range.empty()) {
        const auto colon = flags.beta_range.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--beta-range expects lo:hi");
        cfg.scenario.beta_min = std::stod(flags.beta_range.substr(0, colon));
        cfg.scenario.beta_max = std::stod(flags.beta_range.substr(colon + 1));
    }
#ifdef _OPENMP
    if (flags.threads > 0) omp_set_num_threads(flags.threads);
#endif
    return cfg;
}

int cmd_sweep(const CommonFlags& flags) {
    const SweepConfig cfg = merge_config(flags);
    const SweepSummary summary = run_sweep(cfg);
    write_results(summary, cfg.output_path, cfg.format);
    std::printf("wrote %zu cells x 5 metrics to %s\n", summary.cells.size(),
                cfg.output_path.c_str());
    return 0;
}

const char* event_name(MatchEvent::Kind kind) {
    switch (kind) {
        case MatchEvent::Kind::propose: return "proposes to";
        case MatchEvent::Kind::accept: return "accepted by";
        case MatchEvent::Kind::reject_active: return "rejected by active";
        case MatchEvent::Kind::reject_held: return "rejected (held offer wins) by";
        case MatchEvent::Kind::displace: return "displaced from";
    }
    return "?";
}

void print_trace(const std::vector<MatchEvent>& trace) {
    for (const auto& e : trace)
        std::printf("    round %d: SU%d %s PU%d (v=%.6g)\n", e.round, e.su, event_name(e.kind),
                    e.pu, e.offer);
}

void print_matching(const char* tag, const Matching& m, const Matrix& eta) {
    const RateSummary rs = matched_sum_and_min(m, eta);
    std::printf("  %s:", tag);
    for (int su = 0; su < static_cast<int>(m.pu_of_su.size()); ++su)
        if (m.pu_of_su[su]) std::printf(" SU%d-PU%d", su, *m.pu_of_su[su]);
    if (rs.num_matched == 0) std::printf(" (empty)");
    std::printf("  sum_rate=%.4f min_rate=%.4f matched=%d proposals=%lld rounds=%lld\n",
                rs.sum_rate, rs.min_rate, rs.num_matched,
                static_cast<long long>(m.proposal_count), static_cast<long long>(m.rounds));
}

int cmd_trial(const CommonFlags& flags, std::uint64_t trial_index) {
    SweepConfig cfg = merge_config(flags);
    ScenarioConfig scenario = cfg.scenario;
    scenario.num_sus = cfg.m_values.front();
    scenario.num_pus = cfg.n_values.front();
    scenario.apply_defaults();
    scenario.validate();

    const TrialSeeds seeds = trial_seeds(cfg.base_seed, trial_index);
    const NetworkInstance inst = sample_instance(scenario, seeds.geometry);
    const ObservationMatrix obs = sample_observations(scenario, inst, seeds.noise);
    const DetectionMatrix det = detection_matrix(scenario, inst, obs);
    const Matrix eta = rate_matrix(scenario, inst);
    const PuUtility& utility = default_pu_utility();

    std::printf("trial %llu (base seed %llu): M=%d N=%d\n",
                static_cast<unsigned long long>(trial_index),
                static_cast<unsigned long long>(cfg.base_seed), scenario.num_sus,
                scenario.num_pus);
    std::printf("  PU truth:");
    for (int n = 0; n < scenario.num_pus; ++n)
        std::printf(" PU%d=%s", n, inst.pu_active[n] ? "active" : "inactive");
    std::printf("\n  detection / offers (delta, v):\n");
    const ProposalTable filtered =
        build_preferences(det, eta, scenario.alpha, true, cfg.proposal_order);
    for (int m = 0; m < scenario.num_sus; ++m) {
        std::printf("    SU%d:", m);
        for (int n = 0; n < scenario.num_pus; ++n)
            std::printf(" PU%d(%.4g, %.4g)", n, det.delta(m, n), filtered.utility(m, n));
        std::printf("  list:");
        for (int band : filtered.pref_lists[m]) std::printf(" %d", band);
        if (filtered.pref_lists[m].empty()) std::printf(" (empty)");
        std::printf("\n");
    }

    if (cfg.algorithms.proposed) {
        std::vector<MatchEvent> trace;
        const Matching m = run_algorithm1(filtered, utility, inst.pu_active, &trace);
        std::printf("  proposed algorithm trace:\n");
        print_trace(trace);
        print_matching("proposed", m, eta);
        if (cfg.verify_stability) {
            const StabilityReport rep = is_stable(m, filtered, utility, inst.pu_active);
            std::printf("  stability: %s\n", rep.stable ? "stable" : "BLOCKING PAIRS FOUND");
            if (!rep.stable) return 2;
        }
    }
    if (cfg.algorithms.deferred_acceptance) {
        const ProposalTable full =
            build_preferences(det, eta, scenario.alpha, false, cfg.proposal_order);
        std::vector<MatchEvent> trace;
        const Matching m = run_deferred_acceptance(full, utility, inst.pu_active, &trace);
        std::printf("  deferred acceptance trace:\n");
        print_trace(trace);
        print_matching("deferred_acceptance", m, eta);
    }
    if (cfg.algorithms.random) {
        const std::vector<int> choices = run_random_allocation(scenario, inst, seeds.band_choice);
        const RandomRates rr = random_allocation_rates(scenario, inst, choices);
        std::printf("  random: choices");
        for (int c : choices) std::printf(" %d", c);
        std::printf("  sum_rate=%.4f min_rate=%.4f\n", rr.sum_rate, rr.min_rate);
    }
    return 0;
}

int cmd_verify(const CommonFlags& flags) {
    SweepConfig cfg = merge_config(flags);
    const std::vector<int> m_values =
        flags.m_spec.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10} : cfg.m_values;
    const std::vector<int> n_values =
        flags.n_spec.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6} : cfg.n_values;
    const long long instances = flags.trials ? *flags.trials : 1000;

    const PuUtility& utility = default_pu_utility();
    Rng rng(cfg.base_seed);
    long long unstable = 0;
    long long oracle_misses = 0;
    long long oracle_checked = 0;
    for (long long rep = 0; rep < instances; ++rep) {
        const int m = m_values[rng.uniform_int(static_cast<int>(m_values.size()))];
        const int n = n_values[rng.uniform_int(static_cast<int>(n_values.size()))];
        ScenarioConfig scenario = fuzz_scenario_config(rng, m, n);
        scenario.apply_defaults();
        scenario.validate();
        const NetworkInstance inst = sample_instance(scenario, rng.next_u64());
        const ObservationMatrix obs = sample_observations(scenario, inst, rng.next_u64());
        const DetectionMatrix det = detection_matrix(scenario, inst, obs);
        const Matrix eta = rate_matrix(scenario, inst);
        const ProposalTable table = build_preferences(det, eta, scenario.alpha, true);

        const Matching match = run_algorithm1(table, utility, inst.pu_active);
        if (!is_stable(match, table, utility, inst.pu_active).stable) {
            ++unstable;
            continue;
        }
        if (m <= 4 && n <= 4) {
            ++oracle_checked;
            const auto stable_set = brute_force_stable_matchings(table, utility, inst.pu_active);
            const bool contained =
                std::find_if(stable_set.begin(), stable_set.end(), [&](const Matching& s) {
                    return same_assignment(s, match);
                }) != stable_set.end();
            if (!contained) ++oracle_misses;
        }
    }
    std::printf("verified %lld instances: %lld unstable, %lld/%lld oracle mismatches\n",
                instances, unstable, oracle_misses, oracle_checked);
    return (unstable == 0 && oracle_misses == 0) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cognitive-radio spectrum association simulator"};
    app.require_subcommand(1);

    CommonFlags sweep_flags;
    CLI::App* sweep = app.add_subcommand("sweep", "run a Monte Carlo sweep over (M, N)");
    add_common_flags(sweep, sweep_flags);

    CommonFlags trial_flags;
    std::uint64_t trial_index = 0;
    CLI::App* trial = app.add_subcommand("trial", "trace one trial in detail");
    add_common_flags(trial, trial_flags);
    trial->add_option("--trial-index", trial_index, "trial index within the sweep");

    CommonFlags verify_flags;
    CLI::App* verify = app.add_subcommand("verify", "stability-oracle fuzzing");
    add_common_flags(verify, verify_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return cmd_sweep(sweep_flags);
        if (trial->parsed()) return cmd_trial(trial_flags, trial_index);
        if (verify->parsed()) return cmd_verify(verify_flags);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
