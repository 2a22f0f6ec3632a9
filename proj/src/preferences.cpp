#include "crn/preferences.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace crn {

PuUtility::PuUtility(std::function<double(double)> fn, std::string name)
    : fn_(std::move(fn)), name_(std::move(name)) {
    // Sample over a range where doubles can still resolve the increments.
    double prev = fn_(-30.0);
    for (int i = 1; i <= 120; ++i) {
        const double v = -30.0 + 0.5 * i;
        const double cur = fn_(v);
        if (!(cur > prev))
            throw std::invalid_argument("PuUtility '" + name_ + "' is not strictly increasing");
        prev = cur;
    }
}

PuUtility PuUtility::saturating_exponential() {
    return PuUtility([](double v) { return 1.0 - std::exp(-v); }, "1-exp(-v)");
}

PuUtility PuUtility::identity() {
    return PuUtility([](double v) { return v; }, "identity");
}

double su_utility(double delta, double eta, double alpha) {
    return -alpha * delta + (1.0 - alpha) * eta;
}

bool pu_prefers(const PuUtility&, double v_new, double v_incumbent) {
    return v_new > v_incumbent;
}

double pu_utility(const PuUtility& u, double v, bool active) {
    return active ? 0.0 : u(v);
}

ProposalTable build_preferences(const DetectionMatrix& det, const Matrix& rates,
                                const std::vector<double>& alpha,
                                bool drop_nonpositive, ProposalOrder order) {
    const int m_count = det.delta.rows();
    const int n_count = det.delta.cols();
    if (rates.rows() != m_count || rates.cols() != n_count)
        throw std::invalid_argument("build_preferences: delta and rate matrices must conform");
    if (static_cast<int>(alpha.size()) != m_count)
        throw std::invalid_argument("build_preferences: alpha must have one entry per SU");

    ProposalTable table;
    table.utility = Matrix(m_count, n_count);
    table.pref_lists.resize(m_count);

    for (int m = 0; m < m_count; ++m) {
        for (int n = 0; n < n_count; ++n)
            table.utility(m, n) = su_utility(det.delta(m, n), rates(m, n), alpha[m]);

        std::vector<int> bands(n_count);
        std::iota(bands.begin(), bands.end(), 0);
        if (order == ProposalOrder::ascending_delta) {
            // Ties broken by ascending band index; stable_sort keeps iota order.
            std::stable_sort(bands.begin(), bands.end(), [&](int a, int b) {
                return det.delta(m, a) < det.delta(m, b);
            });
        } else {
            std::stable_sort(bands.begin(), bands.end(), [&](int a, int b) {
                return table.utility(m, a) > table.utility(m, b);
            });
        }

        auto& list = table.pref_lists[m];
        list.reserve(bands.size());
        for (int n : bands)
            if (!drop_nonpositive || table.utility(m, n) > 0.0) list.push_back(n);
    }
    return table;
}

}  // namespace crn
