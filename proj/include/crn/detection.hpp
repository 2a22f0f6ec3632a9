#pragma once

#include <cstdint>

#include "crn/matrix.hpp"
#include "crn/scenario.hpp"

namespace crn {

// Raw sensing snapshot x_{m,n}, one observation per SU-band pair.
struct ObservationMatrix {
    Matrix x;
};

// Log a-posteriori ratios delta_{m,n}. Negative means the band looks vacant,
// positive occupied; magnitude is the confidence.
struct DetectionMatrix {
    Matrix delta;
};

enum class Detection { vacant, occupied };  // H0 / H1

// One snapshot per pair: x = h * s + w when the PU is active, x = w when it
// is not, with w ~ N(0, noise_mw) i.i.d. The PU pilot amplitude is
// s = sqrt(pu_power_mw), constant and known to the SUs.
ObservationMatrix sample_observations(const ScenarioConfig& cfg, const NetworkInstance& inst,
                                      std::uint64_t seed);

// Known pilot amplitude used in the hypothesis model.
double pilot_amplitude(const ScenarioConfig& cfg);

// log(prior / (1 - prior)) + (2*x*h*s - (h*s)^2) / (2 * noise_var).
//
// This is the Gaussian-likelihood posterior ratio with the normalizers
// cancelled, so it stays finite at any SNR. Throws std::invalid_argument when
// prior is outside (0, 1) or noise_var <= 0.
double log_posterior_ratio(double x, double h, double s, double noise_var, double prior);

// Sign rule; an exact zero resolves to vacant.
Detection detect(double delta);

// delta_{m,n} for every pair, using the sensing-channel gains built from
// beta and d_su_pu.
DetectionMatrix detection_matrix(const ScenarioConfig& cfg, const NetworkInstance& inst,
                                 const ObservationMatrix& obs);

}  // namespace crn
