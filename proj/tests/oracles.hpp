#pragma once

// Reference implementations used only by the test suites. Each one evaluates
// the quantity under test through a different route than the library code.

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "crn/harness.hpp"
#include "crn/matching.hpp"
#include "crn/preferences.hpp"
#include "crn/scenario.hpp"

namespace oracle {

// Log a-posteriori ratio evaluated directly through the two Gaussian
// likelihoods (in log space, normalizers included on both sides).
inline double log_posterior_direct(double x, double h, double s, double sigma2, double prior) {
    const double log_norm = -std::log(std::sqrt(2.0 * std::numbers::pi * sigma2));
    const double log_p1 = log_norm - (x - h * s) * (x - h * s) / (2.0 * sigma2);
    const double log_p0 = log_norm - x * x / (2.0 * sigma2);
    return (std::log(prior) + log_p1) - (std::log(1.0 - prior) + log_p0);
}

// MAP decision computed on the probability scale, no logarithms.
inline bool map_occupied_direct(double x, double h, double s, double sigma2, double prior) {
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * sigma2);
    const double p1 = norm * std::exp(-(x - h * s) * (x - h * s) / (2.0 * sigma2));
    const double p0 = norm * std::exp(-x * x / (2.0 * sigma2));
    return prior * p1 > (1.0 - prior) * p0;
}

// Interference-free rate from raw parameters, squaring inside the fraction
// instead of going through an amplitude gain.
inline double rate_direct(double p_mw, double beta, double k, double d, double gamma,
                          double noise_mw) {
    const double g2 = beta / (1.0 + k * std::pow(d, gamma));
    return std::log2(1.0 + p_mw * g2 / noise_mw);
}

// Random-allocation rates recomputed band by band.
inline std::pair<double, double> random_rates_direct(const crn::ScenarioConfig& cfg,
                                                     const crn::NetworkInstance& inst,
                                                     const std::vector<int>& choices) {
    const double p2 = 2.0 * crn::dbm_to_linear(cfg.su_tx_power_dbm);
    const double noise = crn::dbm_to_linear(cfg.noise_dbm);
    std::vector<double> rates(choices.size(), 0.0);
    for (int band = 0; band < cfg.num_pus; ++band) {
        for (int m = 0; m < cfg.num_sus; ++m) {
            if (choices[m] != band) continue;
            const double own =
                p2 * inst.beta_prime[band] /
                (1.0 + cfg.path_loss_constant * std::pow(inst.d_su_link[m], cfg.path_loss_exponent));
            double denom = noise;
            for (int other = 0; other < cfg.num_sus; ++other) {
                if (other == m || choices[other] != band) continue;
                denom += p2 * inst.beta_prime[band] /
                         (1.0 + cfg.path_loss_constant *
                                    std::pow(inst.d_su_su(other, m), cfg.path_loss_exponent));
            }
            rates[m] = std::log2(1.0 + own / denom);
        }
    }
    double sum = 0.0;
    double min = std::numeric_limits<double>::infinity();
    for (double r : rates) {
        sum += r;
        min = std::min(min, r);
    }
    return {sum, min};
}

// Everything a matching test needs for one randomized instance.
struct FuzzTrial {
    crn::ScenarioConfig cfg;
    crn::NetworkInstance inst;
    crn::DetectionMatrix det;
    crn::Matrix eta;
    crn::ProposalTable filtered;
    crn::ProposalTable full;
};

inline FuzzTrial make_fuzz_trial(crn::Rng& rng, int num_sus, int num_pus) {
    FuzzTrial t;
    t.cfg = crn::fuzz_scenario_config(rng, num_sus, num_pus);
    t.cfg.apply_defaults();
    t.cfg.validate();
    t.inst = crn::sample_instance(t.cfg, rng.next_u64());
    const crn::ObservationMatrix obs = crn::sample_observations(t.cfg, t.inst, rng.next_u64());
    t.det = crn::detection_matrix(t.cfg, t.inst, obs);
    t.eta = crn::rate_matrix(t.cfg, t.inst);
    t.filtered = crn::build_preferences(t.det, t.eta, t.cfg.alpha, true);
    t.full = crn::build_preferences(t.det, t.eta, t.cfg.alpha, false);
    return t;
}

// Rank of an SU's assigned band within its list; list size when unmatched
// (worse than any listed band).
inline std::size_t outcome_rank(const crn::Matching& matching, const crn::ProposalTable& table,
                                int su) {
    const auto& list = table.pref_lists[su];
    if (!matching.pu_of_su[su]) return list.size();
    for (std::size_t pos = 0; pos < list.size(); ++pos)
        if (list[pos] == *matching.pu_of_su[su]) return pos;
    return list.size();
}

// True when `candidate` is weakly preferred by every SU to its outcome in
// every matching of `others`.
inline bool su_optimal(const crn::Matching& candidate, const std::vector<crn::Matching>& others,
                       const crn::ProposalTable& table) {
    for (const auto& other : others) {
        for (int su = 0; su < table.num_sus(); ++su) {
            if (outcome_rank(candidate, table, su) > outcome_rank(other, table, su)) return false;
        }
    }
    return true;
}

}  // namespace oracle
