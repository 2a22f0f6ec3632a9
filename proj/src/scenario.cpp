#include "crn/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "crn/rng.hpp"

namespace crn {

double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

double dbm_to_linear(double dbm) { return std::pow(10.0, dbm / 10.0); }

double ScenarioConfig::su_power_mw() const { return dbm_to_linear(su_tx_power_dbm); }
double ScenarioConfig::pu_power_mw() const { return dbm_to_linear(pu_tx_power_dbm); }
double ScenarioConfig::noise_mw() const { return dbm_to_linear(noise_dbm); }

std::vector<double> ScenarioConfig::default_prior_pattern(int num_pus) {
    std::vector<double> p(static_cast<std::size_t>(num_pus));
    for (int n = 0; n < num_pus; ++n) p[n] = std::min(0.1 * (n + 1), 0.9);
    return p;
}

void ScenarioConfig::apply_defaults() {
    if (priors.empty()) {
        if (!prior_bands.empty() && static_cast<int>(prior_bands.size()) != num_pus)
            throw std::invalid_argument("scenario config: prior_bands must have one entry per PU");
        const auto pattern = prior_bands.empty() ? default_prior_pattern(num_pus) : prior_bands;
        priors = Matrix(num_sus, num_pus);
        for (int m = 0; m < num_sus; ++m)
            for (int n = 0; n < num_pus; ++n) priors(m, n) = pattern[n];
    }
    if (alpha.empty()) alpha.assign(static_cast<std::size_t>(num_sus), alpha_default);
    if (truth_activity.empty()) truth_activity.assign(static_cast<std::size_t>(num_pus), false);
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("scenario config: " + what); }

}  // namespace

void ScenarioConfig::validate() const {
    if (num_sus < 1) fail("num_sus must be >= 1");
    if (num_pus < 1) fail("num_pus must be >= 1");
    if (!(area_side >= 0.0)) fail("area_side must be >= 0");
    if (!(link_radius >= 0.0)) fail("link_radius must be >= 0");
    if (!(path_loss_constant >= 0.0)) fail("path_loss_constant must be >= 0");
    if (!std::isfinite(path_loss_exponent)) fail("path_loss_exponent must be finite");
    if (!(beta_min > 0.0) || !(beta_max >= beta_min)) fail("beta range must satisfy 0 < min <= max");
    if (!std::isfinite(su_tx_power_dbm) || !std::isfinite(pu_tx_power_dbm) || !std::isfinite(noise_dbm))
        fail("powers must be finite");
    if (priors.rows() != num_sus || priors.cols() != num_pus)
        fail("priors must be an M x N matrix (call apply_defaults() or size it explicitly)");
    for (int m = 0; m < num_sus; ++m)
        for (int n = 0; n < num_pus; ++n)
            if (!(priors(m, n) > 0.0) || !(priors(m, n) < 1.0))
                fail("priors must lie strictly inside (0, 1)");
    if (static_cast<int>(alpha.size()) != num_sus) fail("alpha must have one entry per SU");
    for (double a : alpha)
        if (!(a >= 0.0) || !(a <= 1.0)) fail("alpha entries must lie in [0, 1]");
    if (static_cast<int>(truth_activity.size()) != num_pus)
        fail("truth_activity must have one entry per PU");
}

namespace {

Point sample_in_square(Rng& rng, double side) {
    return {rng.uniform(0.0, side), rng.uniform(0.0, side)};
}

// Uniform over the radius-r disk around c, re-drawn until inside the square.
// The disk center is inside the square, so the acceptance region always has
// positive area and the loop terminates with probability one.
Point sample_in_disk_clipped(Rng& rng, const Point& c, double r, double side) {
    for (;;) {
        const double rad = r * std::sqrt(rng.uniform01());
        const double ang = 2.0 * std::numbers::pi * rng.uniform01();
        const Point p{c.x + rad * std::cos(ang), c.y + rad * std::sin(ang)};
        if (p.x >= 0.0 && p.x <= side && p.y >= 0.0 && p.y <= side) return p;
    }
}

}  // namespace

NetworkInstance sample_instance(const ScenarioConfig& cfg, std::uint64_t seed) {
    const int m_count = cfg.num_sus;
    const int n_count = cfg.num_pus;
    Rng rng(seed);

    NetworkInstance inst;
    inst.su_tx.resize(m_count);
    inst.su_rx.resize(m_count);
    inst.pu_tx.resize(n_count);

    if (cfg.area_side <= 0.0) {
        // Degenerate square: every position collapses to the origin.
        inst.su_tx.assign(m_count, Point{});
        inst.su_rx.assign(m_count, Point{});
        inst.pu_tx.assign(n_count, Point{});
    } else {
        for (int m = 0; m < m_count; ++m) inst.su_tx[m] = sample_in_square(rng, cfg.area_side);
        for (int m = 0; m < m_count; ++m)
            inst.su_rx[m] = sample_in_disk_clipped(rng, inst.su_tx[m], cfg.link_radius, cfg.area_side);
        for (int n = 0; n < n_count; ++n) inst.pu_tx[n] = sample_in_square(rng, cfg.area_side);
    }

    inst.beta.resize(n_count);
    inst.beta_prime.resize(n_count);
    for (int n = 0; n < n_count; ++n) inst.beta[n] = rng.uniform(cfg.beta_min, cfg.beta_max);
    for (int n = 0; n < n_count; ++n) inst.beta_prime[n] = rng.uniform(cfg.beta_min, cfg.beta_max);

    inst.d_su_pu = Matrix(m_count, n_count);
    for (int m = 0; m < m_count; ++m)
        for (int n = 0; n < n_count; ++n) inst.d_su_pu(m, n) = distance(inst.su_tx[m], inst.pu_tx[n]);

    inst.d_su_link.resize(m_count);
    inst.d_su_su = Matrix(m_count, m_count);
    for (int i = 0; i < m_count; ++i)
        for (int j = 0; j < m_count; ++j) inst.d_su_su(i, j) = distance(inst.su_tx[i], inst.su_rx[j]);
    for (int m = 0; m < m_count; ++m) inst.d_su_link[m] = inst.d_su_su(m, m);

    inst.pu_active = cfg.truth_activity;
    return inst;
}

NetworkInstance sample_instance(const ScenarioConfig& cfg) {
    return sample_instance(cfg, cfg.rng_seed);
}

double channel_gain(double beta, double k, double d, double gamma) {
    return std::sqrt(beta / (1.0 + k * std::pow(d, gamma)));
}

double achievable_rate(double p_tx_mw, double gain, double noise_mw) {
    return std::log2(1.0 + p_tx_mw * gain * gain / noise_mw);
}

Matrix rate_matrix(const ScenarioConfig& cfg, const NetworkInstance& inst) {
    const double p_mw = cfg.su_power_mw();
    const double noise = cfg.noise_mw();
    Matrix eta(cfg.num_sus, cfg.num_pus);
    for (int m = 0; m < cfg.num_sus; ++m) {
        for (int n = 0; n < cfg.num_pus; ++n) {
            const double g = channel_gain(inst.beta_prime[n], cfg.path_loss_constant,
                                          inst.d_su_link[m], cfg.path_loss_exponent);
            eta(m, n) = achievable_rate(p_mw, g, noise);
        }
    }
    return eta;
}

}  // namespace crn
