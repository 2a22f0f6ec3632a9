#include <doctest.h>

#include <cmath>

#include "crn/detection.hpp"
#include "crn/rng.hpp"
#include "oracles.hpp"

using namespace crn;

namespace {

ScenarioConfig default_cfg(int m, int n) {
    ScenarioConfig cfg;
    cfg.num_sus = m;
    cfg.num_pus = n;
    cfg.apply_defaults();
    cfg.validate();
    return cfg;
}

}  // namespace

TEST_CASE("observations reduce to the noiseless model as noise vanishes") {
    ScenarioConfig cfg = default_cfg(2, 2);
    cfg.noise_dbm = -2000.0;  // sigma ~ 1e-100

    SUBCASE("inactive PU: x is pure (vanishing) noise") {
        const NetworkInstance inst = sample_instance(cfg, 5);
        const ObservationMatrix obs = sample_observations(cfg, inst, 6);
        for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) CHECK(std::abs(obs.x(m, n)) < 1e-90);
    }

    SUBCASE("active PU: x converges to h*s") {
        cfg.truth_activity = {true, true};
        const NetworkInstance inst = sample_instance(cfg, 5);
        const ObservationMatrix obs = sample_observations(cfg, inst, 6);
        const double s = pilot_amplitude(cfg);
        for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) {
                const double h = channel_gain(inst.beta[n], cfg.path_loss_constant,
                                              inst.d_su_pu(m, n), cfg.path_loss_exponent);
                CHECK(obs.x(m, n) == doctest::Approx(h * s).epsilon(1e-12));
            }
    }
}

TEST_CASE("H0 observations concentrate around zero") {
    ScenarioConfig cfg = default_cfg(1, 1);
    const NetworkInstance inst = sample_instance(cfg, 31);
    const int reps = 100000;
    double sum = 0.0;
    // One fresh draw per seed keeps the samples independent.
    for (int i = 0; i < reps; ++i)
        sum += sample_observations(cfg, inst, static_cast<std::uint64_t>(i)).x(0, 0);
    const double sigma = std::sqrt(cfg.noise_mw());
    CHECK(std::abs(sum / reps) < 4.0 * sigma / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("log_posterior_ratio closed-form anchors") {
    SUBCASE("symmetric midpoint with flat prior is zero") {
        const double hs = 1.7;
        CHECK(log_posterior_ratio(hs / 2.0, 1.0, hs, 0.3, 0.5) == 0.0);
    }
    SUBCASE("worked example") {
        CHECK(log_posterior_ratio(2.0, 1.0, 2.0, 1.0, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
    }
    SUBCASE("prior-only term at the midpoint") {
        const double hs = 0.9;
        CHECK(log_posterior_ratio(hs / 2.0, 1.0, hs, 0.5, 0.1) ==
              doctest::Approx(std::log(1.0 / 9.0)).epsilon(1e-12));
    }
}

TEST_CASE("closed form equals the direct likelihood-ratio evaluation") {
    Rng rng(97);
    double max_diff = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double x = rng.uniform(-5.0, 5.0);
        const double h = rng.uniform(0.01, 2.0);
        const double s = rng.uniform(0.01, 3.0);
        const double sigma2 = rng.uniform(0.05, 4.0);
        const double prior = rng.uniform(0.01, 0.99);
        const double closed = log_posterior_ratio(x, h, s, sigma2, prior);
        const double direct = oracle::log_posterior_direct(x, h, s, sigma2, prior);
        max_diff = std::max(max_diff, std::abs(closed - direct));
    }
    CHECK(max_diff <= 1e-9);
}

TEST_CASE("delta is monotone in the observation and in the prior") {
    Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        const double h = rng.uniform(0.05, 2.0);
        const double s = rng.uniform(0.05, 3.0);
        const double sigma2 = rng.uniform(0.05, 4.0);
        const double prior = rng.uniform(0.05, 0.9);
        const double x = rng.uniform(-4.0, 4.0);
        CHECK(log_posterior_ratio(x + 0.5, h, s, sigma2, prior) >
              log_posterior_ratio(x, h, s, sigma2, prior));
        CHECK(log_posterior_ratio(x, h, s, sigma2, prior + 0.05) >
              log_posterior_ratio(x, h, s, sigma2, prior));
    }
}

TEST_CASE("detect sign rule") {
    CHECK(detect(3.2) == Detection::occupied);
    CHECK(detect(-0.1) == Detection::vacant);
    CHECK(detect(0.0) == Detection::vacant);
}

TEST_CASE("detect agrees with the direct MAP comparison") {
    Rng rng(41);
    for (int i = 0; i < 20000; ++i) {
        const double x = rng.uniform(-5.0, 5.0);
        const double h = rng.uniform(0.01, 2.0);
        const double s = rng.uniform(0.01, 3.0);
        const double sigma2 = rng.uniform(0.05, 4.0);
        const double prior = rng.uniform(0.01, 0.99);
        const bool occupied = detect(log_posterior_ratio(x, h, s, sigma2, prior)) ==
                              Detection::occupied;
        CHECK(occupied == oracle::map_occupied_direct(x, h, s, sigma2, prior));
    }
}

TEST_CASE("invalid priors and noise are rejected") {
    CHECK_THROWS_AS(log_posterior_ratio(0.0, 1.0, 1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(log_posterior_ratio(0.0, 1.0, 1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(log_posterior_ratio(0.0, 1.0, 1.0, 1.0, -0.2), std::invalid_argument);
    CHECK_THROWS_AS(log_posterior_ratio(0.0, 1.0, 1.0, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("detection reads the sensing coefficients, not the band ones") {
    ScenarioConfig cfg = default_cfg(1, 1);
    NetworkInstance inst = sample_instance(cfg, 4);
    inst.beta = {0.7};
    inst.beta_prime = {1.3};

    ObservationMatrix obs;
    obs.x = Matrix(1, 1, 0.02);
    const DetectionMatrix det = detection_matrix(cfg, inst, obs);
    const double h = channel_gain(0.7, cfg.path_loss_constant, inst.d_su_pu(0, 0),
                                  cfg.path_loss_exponent);
    CHECK(det.delta(0, 0) ==
          log_posterior_ratio(0.02, h, pilot_amplitude(cfg), cfg.noise_mw(), cfg.priors(0, 0)));

    const Matrix eta = rate_matrix(cfg, inst);
    const double g = channel_gain(1.3, cfg.path_loss_constant, inst.d_su_link[0],
                                  cfg.path_loss_exponent);
    CHECK(eta(0, 0) == achievable_rate(cfg.su_power_mw(), g, cfg.noise_mw()));
}

TEST_CASE("vacant bands are mostly declared vacant at the default SNR") {
    const ScenarioConfig cfg = default_cfg(4, 4);  // priors .1 .2 .3 .4, PUs inactive
    std::vector<int> vacant_votes(4, 0);
    int per_band = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const NetworkInstance inst = sample_instance(cfg, derive_seed(5150, trial, 0));
        const ObservationMatrix obs = sample_observations(cfg, inst, derive_seed(5150, trial, 1));
        const DetectionMatrix det = detection_matrix(cfg, inst, obs);
        for (int m = 0; m < cfg.num_sus; ++m)
            for (int n = 0; n < cfg.num_pus; ++n)
                if (det.delta(m, n) < 0.0) ++vacant_votes[n];
        per_band += cfg.num_sus;
    }
    for (int n = 0; n < 4; ++n)
        CHECK(static_cast<double>(vacant_votes[n]) / per_band > 0.5);
}
