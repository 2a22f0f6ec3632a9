#include "crn/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace crn {

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::proposed: return "proposed";
        case Algorithm::deferred_acceptance: return "deferred_acceptance";
        case Algorithm::random: return "random";
    }
    return "?";
}

RateSummary matched_sum_and_min(const Matching& matching, const Matrix& rates) {
    RateSummary summary;
    double min_rate = std::numeric_limits<double>::infinity();
    for (int m = 0; m < static_cast<int>(matching.pu_of_su.size()); ++m) {
        if (!matching.pu_of_su[m]) continue;
        const double rate = rates(m, *matching.pu_of_su[m]);
        summary.sum_rate += rate;
        min_rate = std::min(min_rate, rate);
        ++summary.num_matched;
    }
    summary.min_rate = summary.num_matched > 0 ? min_rate : 0.0;
    return summary;
}

RandomRates random_allocation_rates(const ScenarioConfig& cfg, const NetworkInstance& inst,
                                    const std::vector<int>& choices,
                                    std::vector<double>* per_su) {
    const int m_count = cfg.num_sus;
    if (static_cast<int>(choices.size()) != m_count)
        throw std::invalid_argument("random_allocation_rates: one band choice per SU required");

    const double p2_mw = 2.0 * cfg.su_power_mw();
    const double noise = cfg.noise_mw();

    if (per_su) per_su->assign(static_cast<std::size_t>(m_count), 0.0);
    RandomRates rates;
    rates.min_rate = std::numeric_limits<double>::infinity();
    for (int m = 0; m < m_count; ++m) {
        const int band = choices[m];
        const double g = channel_gain(inst.beta_prime[band], cfg.path_loss_constant,
                                      inst.d_su_link[m], cfg.path_loss_exponent);
        double interference = 0.0;
        for (int other = 0; other < m_count; ++other) {
            if (other == m || choices[other] != band) continue;
            const double g_int = channel_gain(inst.beta_prime[band], cfg.path_loss_constant,
                                              inst.d_su_su(other, m), cfg.path_loss_exponent);
            interference += p2_mw * g_int * g_int;
        }
        const double sinr = p2_mw * g * g / (noise + interference);
        const double rate = std::log2(1.0 + sinr);
        if (per_su) (*per_su)[m] = rate;
        rates.sum_rate += rate;
        rates.min_rate = std::min(rates.min_rate, rate);
    }
    if (m_count == 0) rates.min_rate = 0.0;
    return rates;
}

double improvement_pct(double a, double b) {
    if (!(b > 0.0)) throw std::invalid_argument("improvement_pct: baseline must be positive");
    return 100.0 * (a - b) / b;
}

}  // namespace crn
