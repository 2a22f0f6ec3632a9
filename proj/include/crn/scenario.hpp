#pragma once

#include <cstdint>
#include <vector>

#include "crn/matrix.hpp"

namespace crn {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Point& a, const Point& b);

// Network and propagation parameters for one simulated deployment.
//
// Power values are configured in dBm and converted to linear milliwatts at
// this boundary; everything downstream works in mW.
struct ScenarioConfig {
    int num_sus = 10;                // M, secondary transmitter-receiver pairs
    int num_pus = 4;                 // N, primary pairs / licensed bands
    double area_side = 100.0;        // deployment square, meters
    double su_tx_power_dbm = 13.0;
    double pu_tx_power_dbm = 17.0;
    double noise_dbm = -90.0;        // AWGN variance, same for all links
    double path_loss_exponent = 3.0;
    double path_loss_constant = 1.0;
    double link_radius = 10.0;       // SU receiver lies in this disk around its transmitter
    double beta_min = 0.5;           // frequency-selective coefficient range,
    double beta_max = 1.5;           // shared by beta and beta_prime draws
    Matrix priors;                   // M x N perceived activity probabilities, each in (0,1)
    std::vector<double> prior_bands;  // per-band prior broadcast to every SU when priors is empty
    std::vector<double> alpha;       // per-SU utility weight in [0, 1]
    double alpha_default = 0.5;      // broadcast to every SU when alpha is empty
    std::vector<bool> truth_activity;  // actual per-PU state; inactive by default
    std::uint64_t rng_seed = 1;

    double su_power_mw() const;
    double pu_power_mw() const;
    double noise_mw() const;

    // Per-band default prior: 0.1 * (band index + 1), capped at 0.9 so it
    // stays a valid probability for any band count.
    static std::vector<double> default_prior_pattern(int num_pus);

    // Fill priors / alpha / truth_activity when left empty. Explicitly set
    // fields are kept and must then match the configured dimensions.
    void apply_defaults();

    // Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

// Sampled geometry, channel coefficients, and PU truth for one trial.
struct NetworkInstance {
    std::vector<Point> su_tx;         // M
    std::vector<Point> su_rx;         // M
    std::vector<Point> pu_tx;         // N
    std::vector<double> beta;         // N, sensing-channel coefficients
    std::vector<double> beta_prime;   // N, transmission-band coefficients
    Matrix d_su_pu;                   // M x N, SU-m transmitter to PU-n transmitter
    std::vector<double> d_su_link;    // M, SU transmitter to own receiver
    Matrix d_su_su;                   // M x M, (i, j) = SU-i transmitter to SU-j receiver
    std::vector<bool> pu_active;      // N

    bool operator==(const NetworkInstance&) const = default;
};

bool operator==(const Point& a, const Point& b);

// Deterministic given (cfg, seed): SU/PU transmitters i.i.d. uniform in the
// square, each SU receiver uniform in the link_radius disk around its
// transmitter (re-sampled until inside the square). The single-argument form
// uses cfg.rng_seed.
NetworkInstance sample_instance(const ScenarioConfig& cfg, std::uint64_t seed);
NetworkInstance sample_instance(const ScenarioConfig& cfg);

// 10^(dbm / 10), in milliwatts.
double dbm_to_linear(double dbm);

// Amplitude gain sqrt(beta / (1 + k * d^gamma)); finite at d = 0.
double channel_gain(double beta, double k, double d, double gamma);

// log2(1 + p_tx * g^2 / noise), bits/s/Hz.
double achievable_rate(double p_tx_mw, double gain, double noise_mw);

// M x N rates using the own-link gain of each SU on every band; entries vary
// across a row only through beta_prime.
Matrix rate_matrix(const ScenarioConfig& cfg, const NetworkInstance& inst);

}  // namespace crn
