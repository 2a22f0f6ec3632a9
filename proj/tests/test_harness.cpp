#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "crn/config_io.hpp"
#include "crn/harness.hpp"
#include "crn/results_io.hpp"

using namespace crn;

namespace {

SweepConfig small_sweep() {
    SweepConfig sweep;
    sweep.m_values = {5};
    sweep.n_values = {3};
    sweep.trials = 400;
    sweep.base_seed = 99;
    return sweep;
}

}  // namespace

TEST_CASE("run_trial is deterministic and honors the algorithm set") {
    ScenarioConfig cfg;
    cfg.num_sus = 6;
    cfg.num_pus = 3;
    cfg.apply_defaults();

    TrialOptions opt;
    opt.base_seed = 7;
    const TrialResult a = run_trial(cfg, opt, 13);
    const TrialResult b = run_trial(cfg, opt, 13);
    CHECK(a == b);
    REQUIRE(a.proposed.has_value());
    REQUIRE(a.deferred_acceptance.has_value());
    REQUIRE(a.random.has_value());
    CHECK(a.random->num_matched == 6);

    TrialOptions only_proposed;
    only_proposed.base_seed = 7;
    only_proposed.algorithms = AlgorithmSet{true, false, false};
    const TrialResult c = run_trial(cfg, only_proposed, 13);
    CHECK(c.proposed == a.proposed);
    CHECK_FALSE(c.deferred_acceptance.has_value());
    CHECK_FALSE(c.random.has_value());
}

TEST_CASE("proposed equals deferred acceptance when nothing is filtered") {
    // At the default SNR every utility is positive with overwhelming odds,
    // so the filter is a no-op and the paired metrics coincide.
    ScenarioConfig cfg;
    cfg.num_sus = 8;
    cfg.num_pus = 4;
    cfg.apply_defaults();
    TrialOptions opt;
    opt.base_seed = 1001;
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        const TrialResult r = run_trial(cfg, opt, trial);
        CHECK(r.proposed->sum_rate == r.deferred_acceptance->sum_rate);
        CHECK(r.proposed->proposal_count == r.deferred_acceptance->proposal_count);
    }
}

TEST_CASE("stability verification flag is honored") {
    ScenarioConfig cfg;
    cfg.num_sus = 5;
    cfg.num_pus = 3;
    cfg.apply_defaults();
    TrialOptions opt;
    opt.verify_stability = true;
    const TrialResult r = run_trial(cfg, opt, 0);
    CHECK(r.stability_checked);
    CHECK(r.stability_ok);
}

TEST_CASE("single-trial sweep reproduces that trial with zero stderr") {
    SweepConfig sweep = small_sweep();
    sweep.trials = 1;
    const SweepSummary summary = run_sweep(sweep, RunMode::serial);

    ScenarioConfig cell = sweep.scenario;
    cell.num_sus = 5;
    cell.num_pus = 3;
    cell.apply_defaults();
    TrialOptions opt;
    opt.base_seed = sweep.base_seed;
    const TrialResult trial = run_trial(cell, opt, 0);

    const CellStats* proposed = summary.find(5, 3, Algorithm::proposed);
    REQUIRE(proposed != nullptr);
    CHECK(proposed->trials == 1);
    CHECK(proposed->sum_rate.mean == trial.proposed->sum_rate);
    CHECK(proposed->sum_rate.std_error == 0.0);
    CHECK(proposed->min_rate.mean == trial.proposed->min_rate);
    CHECK(proposed->proposal_count.mean ==
          static_cast<double>(trial.proposed->proposal_count));
}

TEST_CASE("sweep trials are indexed, so growing the count keeps the prefix") {
    SweepConfig sweep = small_sweep();
    sweep.trials = 2;
    const SweepSummary two = run_sweep(sweep, RunMode::serial);

    ScenarioConfig cell = sweep.scenario;
    cell.num_sus = 5;
    cell.num_pus = 3;
    cell.apply_defaults();
    TrialOptions opt;
    opt.base_seed = sweep.base_seed;
    const TrialResult t0 = run_trial(cell, opt, 0);
    const TrialResult t1 = run_trial(cell, opt, 1);

    const CellStats* proposed = two.find(5, 3, Algorithm::proposed);
    REQUIRE(proposed != nullptr);
    CHECK(proposed->sum_rate.mean ==
          (t0.proposed->sum_rate + t1.proposed->sum_rate) / 2.0);

    sweep.trials = 1;
    const SweepSummary one = run_sweep(sweep, RunMode::serial);
    CHECK(one.find(5, 3, Algorithm::proposed)->sum_rate.mean == t0.proposed->sum_rate);
}

TEST_CASE("serial and parallel sweeps are bit-identical") {
    const SweepConfig sweep = small_sweep();
    const SweepSummary serial = run_sweep(sweep, RunMode::serial);
    const SweepSummary parallel = run_sweep(sweep, RunMode::parallel);
    CHECK(serial == parallel);

    std::ostringstream csv_serial;
    std::ostringstream csv_parallel;
    write_results_csv(serial, csv_serial);
    write_results_csv(parallel, csv_parallel);
    CHECK(csv_serial.str() == csv_parallel.str());
}

TEST_CASE("sweep emits one cell per requested algorithm in order") {
    SweepConfig sweep = small_sweep();
    sweep.m_values = {2, 3};
    sweep.n_values = {2};
    sweep.trials = 20;
    sweep.algorithms = AlgorithmSet::parse("proposed,random");
    const SweepSummary summary = run_sweep(sweep);
    REQUIRE(summary.cells.size() == 4);
    CHECK(summary.cells[0].m == 2);
    CHECK(summary.cells[0].algorithm == Algorithm::proposed);
    CHECK(summary.cells[1].algorithm == Algorithm::random);
    CHECK(summary.cells[2].m == 3);
    CHECK(summary.find(3, 2, Algorithm::deferred_acceptance) == nullptr);
}

TEST_CASE("csv output schema and round-trip") {
    SweepConfig sweep = small_sweep();
    sweep.trials = 30;
    const SweepSummary summary = run_sweep(sweep);

    std::ostringstream out;
    write_results_csv(summary, out);
    const std::string first_pass = out.str();
    CHECK(first_pass.substr(0, first_pass.find('\n')) ==
          "m,n,algorithm,metric,mean,stderr,trials");
    // 1 header + 3 algorithms x 5 metrics
    CHECK(std::count(first_pass.begin(), first_pass.end(), '\n') == 16);

    std::istringstream in(first_pass);
    const SweepSummary parsed = read_results_csv(in);
    std::ostringstream second;
    write_results_csv(parsed, second);
    CHECK(second.str() == first_pass);
}

TEST_CASE("empty summary writes only the header") {
    std::ostringstream out;
    write_results_csv(SweepSummary{}, out);
    CHECK(out.str() == "m,n,algorithm,metric,mean,stderr,trials\n");
}

TEST_CASE("json mirror carries the same numbers") {
    SweepConfig sweep = small_sweep();
    sweep.trials = 10;
    sweep.algorithms = AlgorithmSet::parse("proposed");
    const SweepSummary summary = run_sweep(sweep);
    std::ostringstream out;
    write_results_json(summary, out);
    const std::string json = out.str();
    CHECK(json.find("\"metric\": \"sum_rate\"") != std::string::npos);
    CHECK(json.find(format_sig12(summary.cells[0].sum_rate.mean)) != std::string::npos);
}

TEST_CASE("format_sig12 is canonical under re-parsing") {
    for (double v : {0.0, 1.0, -2.25, 19.952623149688797, 1e-9, 123456.789012345, 3.1e-17}) {
        const std::string text = format_sig12(v);
        const double parsed = std::strtod(text.c_str(), nullptr);
        CHECK(format_sig12(parsed) == text);
    }
}

TEST_CASE("algorithm set parsing") {
    const AlgorithmSet all = AlgorithmSet::parse("all");
    CHECK(all.proposed);
    CHECK(all.deferred_acceptance);
    CHECK(all.random);
    const AlgorithmSet two = AlgorithmSet::parse("proposed,random");
    CHECK(two.proposed);
    CHECK_FALSE(two.deferred_acceptance);
    CHECK(two.to_string() == "proposed,random");
    CHECK_THROWS_AS(AlgorithmSet::parse("gale"), std::invalid_argument);
    CHECK_THROWS_AS(AlgorithmSet::parse(""), std::invalid_argument);
}

TEST_CASE("key=value config parsing") {
    std::istringstream in(
        "# comment\n"
        "m_values = 2..4,8\n"
        "n_values = 3\n"
        "trials = 250\n"
        "base_seed = 17\n"
        "algorithms = proposed,deferred_acceptance\n"
        "noise_dbm = -80\n"
        "alpha = 0.25\n"
        "priors = 0.1,0.5,0.7\n"
        "truth_activity = 0,1,0\n"
        "link_radius = 12.5\n"
        "format = json\n"
        "proposal_order = utility\n");
    const SweepConfig cfg = parse_sweep_config(in);
    CHECK(cfg.m_values == std::vector<int>{2, 3, 4, 8});
    CHECK(cfg.n_values == std::vector<int>{3});
    CHECK(cfg.trials == 250);
    CHECK(cfg.base_seed == 17);
    CHECK(cfg.algorithms.proposed);
    CHECK_FALSE(cfg.algorithms.random);
    CHECK(cfg.scenario.noise_dbm == -80.0);
    CHECK(cfg.scenario.alpha_default == 0.25);
    CHECK(cfg.scenario.prior_bands == std::vector<double>{0.1, 0.5, 0.7});
    CHECK(cfg.scenario.truth_activity == std::vector<bool>{false, true, false});
    CHECK(cfg.scenario.link_radius == 12.5);
    CHECK(cfg.format == OutputFormat::json);
    CHECK(cfg.proposal_order == ProposalOrder::descending_utility);
}

TEST_CASE("empty config reproduces the built-in defaults") {
    std::istringstream in("\n");
    const SweepConfig cfg = parse_sweep_config(in);
    CHECK(cfg.m_values == std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(cfg.n_values == std::vector<int>{3, 4});
    CHECK(cfg.trials == 100000);
    CHECK(cfg.scenario.area_side == 100.0);
    CHECK(cfg.scenario.su_tx_power_dbm == 13.0);
    CHECK(cfg.scenario.pu_tx_power_dbm == 17.0);
    CHECK(cfg.scenario.noise_dbm == -90.0);
    CHECK(cfg.scenario.path_loss_exponent == 3.0);
    CHECK(cfg.scenario.link_radius == 10.0);
}

TEST_CASE("json config parsing") {
    std::istringstream in(R"({
        "m_values": [4, 6],
        "n_values": [2],
        "trials": 99,
        "algorithms": "all",
        "priors": [0.2, 0.4],
        "verify_stability": true,
        "beta_min": 0.8,
        "beta_max": 1.2
    })");
    const SweepConfig cfg = parse_sweep_config(in);
    CHECK(cfg.m_values == std::vector<int>{4, 6});
    CHECK(cfg.trials == 99);
    CHECK(cfg.verify_stability);
    CHECK(cfg.scenario.prior_bands == std::vector<double>{0.2, 0.4});
    CHECK(cfg.scenario.beta_min == 0.8);
    CHECK(cfg.scenario.beta_max == 1.2);
}

TEST_CASE("config errors carry context") {
    std::istringstream bad_key("bogus = 1\n");
    CHECK_THROWS_AS(parse_sweep_config(bad_key), std::invalid_argument);
    std::istringstream bad_line("trials 250\n");
    CHECK_THROWS_AS(parse_sweep_config(bad_line), std::invalid_argument);
    std::istringstream bad_value("trials = soon\n");
    CHECK_THROWS_AS(parse_sweep_config(bad_value), std::invalid_argument);
}

TEST_CASE("explicit priors must fit the sweep cell") {
    SweepConfig sweep = small_sweep();
    sweep.trials = 2;
    sweep.scenario.prior_bands = {0.1, 0.2};  // cell has n = 3
    CHECK_THROWS_AS(run_sweep(sweep), std::invalid_argument);
}

TEST_CASE("fuzz configs are always valid") {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        ScenarioConfig cfg = fuzz_scenario_config(rng, 1 + rng.uniform_int(10),
                                                  1 + rng.uniform_int(6));
        cfg.apply_defaults();
        CHECK_NOTHROW(cfg.validate());
    }
}

TEST_CASE("results file writing surfaces io errors") {
    const SweepSummary summary;
    CHECK_THROWS_AS(write_results(summary, "/nonexistent-dir/out.csv", OutputFormat::csv),
                    std::runtime_error);
}
