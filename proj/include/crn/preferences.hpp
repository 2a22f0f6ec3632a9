#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crn/detection.hpp"
#include "crn/matrix.hpp"

namespace crn {

// Strictly increasing map from an SU's offered utility v to the reward an
// inactive PU collects. Strict monotonicity is validated by sampling at
// construction; it is what makes ranking proposals by v equivalent to
// ranking them by u(v).
class PuUtility {
public:
    PuUtility(std::function<double(double)> fn, std::string name);

    // u(v) = 1 - exp(-v), the default reward model.
    static PuUtility saturating_exponential();
    // u(v) = v, used to check that outcomes do not depend on the map chosen.
    static PuUtility identity();

    double operator()(double v) const { return fn_(v); }
    const std::string& name() const { return name_; }

private:
    std::function<double(double)> fn_;
    std::string name_;
};

// Weighted-sum utility an SU offers for a band: -alpha * delta + (1 - alpha) * eta.
double su_utility(double delta, double eta, double alpha);

// True when an inactive PU swaps its incumbent for the new proposal, i.e.
// u(v_new) > u(v_incumbent). Because u is strictly increasing this is
// evaluated as v_new > v_incumbent, which is exact even where a saturating u
// (e.g. 1 - exp(-v) for v beyond ~36) rounds to the same double and would
// report a spurious tie. Equality keeps the incumbent.
bool pu_prefers(const PuUtility& u, double v_new, double v_incumbent);

// Reward actually collected: 0 for an active PU, u(v) otherwise.
double pu_utility(const PuUtility& u, double v, bool active);

// Proposal order within an SU's list. The default follows the detection
// ranking (most-confidently-vacant band first); the alternative orders by the
// offered utility itself, which can differ when rates vary across bands.
enum class ProposalOrder { ascending_delta, descending_utility };

// Offered utilities plus each SU's ordered proposal list. Lists hold band
// indices; with filtering enabled only bands with v > 0 survive.
struct ProposalTable {
    Matrix utility;                             // v_{m,n}
    std::vector<std::vector<int>> pref_lists;   // per SU, in proposal order

    int num_sus() const { return static_cast<int>(pref_lists.size()); }
    int num_bands() const { return utility.cols(); }
};

ProposalTable build_preferences(const DetectionMatrix& det, const Matrix& rates,
                                const std::vector<double>& alpha,
                                bool drop_nonpositive = true,
                                ProposalOrder order = ProposalOrder::ascending_delta);

}  // namespace crn
