#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "crn/matching.hpp"
#include "crn/matrix.hpp"
#include "crn/scenario.hpp"

namespace crn {

enum class Algorithm { proposed, deferred_acceptance, random };

std::string_view algorithm_name(Algorithm a);

// Figures of merit for one algorithm on one trial. min_rate runs over the
// SUs that actually transmit: the matched ones for the matching algorithms,
// all M of them for random allocation.
struct TrialMetrics {
    Algorithm algorithm = Algorithm::proposed;
    double sum_rate = 0.0;
    double min_rate = 0.0;
    int num_matched = 0;
    std::int64_t proposal_count = 0;
    std::int64_t rounds = 0;

    bool operator==(const TrialMetrics&) const = default;
};

struct RateSummary {
    double sum_rate = 0.0;
    double min_rate = 0.0;
    int num_matched = 0;
};

// Sum and minimum of the interference-free rates over matched SUs; an empty
// matching yields (0, 0, 0).
RateSummary matched_sum_and_min(const Matching& matching, const Matrix& rates);

// Rates under random allocation: every SU transmits at twice the configured
// power (the budget it did not spend on sensing) and co-channel SUs interfere.
// Returns (sum over all SUs, min over all SUs).
struct RandomRates {
    double sum_rate = 0.0;
    double min_rate = 0.0;
};
RandomRates random_allocation_rates(const ScenarioConfig& cfg, const NetworkInstance& inst,
                                    const std::vector<int>& choices,
                                    std::vector<double>* per_su = nullptr);

// 100 * (a - b) / b. Throws std::invalid_argument when b <= 0.
double improvement_pct(double a, double b);

}  // namespace crn
