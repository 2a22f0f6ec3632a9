#include "crn/detection.hpp"

#include <cmath>
#include <stdexcept>

#include "crn/rng.hpp"

namespace crn {

double pilot_amplitude(const ScenarioConfig& cfg) { return std::sqrt(cfg.pu_power_mw()); }

ObservationMatrix sample_observations(const ScenarioConfig& cfg, const NetworkInstance& inst,
                                      std::uint64_t seed) {
    Rng rng(seed);
    const double noise_std = std::sqrt(cfg.noise_mw());
    const double s = pilot_amplitude(cfg);

    ObservationMatrix obs;
    obs.x = Matrix(cfg.num_sus, cfg.num_pus);
    for (int m = 0; m < cfg.num_sus; ++m) {
        for (int n = 0; n < cfg.num_pus; ++n) {
            const double w = rng.normal(0.0, noise_std);
            if (inst.pu_active[n]) {
                const double h = channel_gain(inst.beta[n], cfg.path_loss_constant,
                                              inst.d_su_pu(m, n), cfg.path_loss_exponent);
                obs.x(m, n) = h * s + w;
            } else {
                obs.x(m, n) = w;
            }
        }
    }
    return obs;
}

double log_posterior_ratio(double x, double h, double s, double noise_var, double prior) {
    if (!(prior > 0.0) || !(prior < 1.0))
        throw std::invalid_argument("log_posterior_ratio: prior must lie strictly inside (0, 1)");
    if (!(noise_var > 0.0))
        throw std::invalid_argument("log_posterior_ratio: noise variance must be positive");
    const double hs = h * s;
    return std::log(prior / (1.0 - prior)) + (2.0 * x * hs - hs * hs) / (2.0 * noise_var);
}

Detection detect(double delta) {
    return delta > 0.0 ? Detection::occupied : Detection::vacant;
}

DetectionMatrix detection_matrix(const ScenarioConfig& cfg, const NetworkInstance& inst,
                                 const ObservationMatrix& obs) {
    const double noise_var = cfg.noise_mw();
    const double s = pilot_amplitude(cfg);

    DetectionMatrix det;
    det.delta = Matrix(cfg.num_sus, cfg.num_pus);
    for (int m = 0; m < cfg.num_sus; ++m) {
        for (int n = 0; n < cfg.num_pus; ++n) {
            const double h = channel_gain(inst.beta[n], cfg.path_loss_constant,
                                          inst.d_su_pu(m, n), cfg.path_loss_exponent);
            det.delta(m, n) = log_posterior_ratio(obs.x(m, n), h, s, noise_var, cfg.priors(m, n));
        }
    }
    return det;
}

}  // namespace crn
