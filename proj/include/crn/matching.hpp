#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crn/preferences.hpp"
#include "crn/scenario.hpp"

namespace crn {

// Partial one-to-one SU <-> band association plus protocol counters.
// proposal_count is the total number of proposals sent (one message each in
// the distributed protocol, reported as "iterations"); rounds counts the
// sweeps in which at least one proposal was sent.
struct Matching {
    std::vector<std::optional<int>> su_of_pu;  // N entries
    std::vector<std::optional<int>> pu_of_su;  // M entries
    std::int64_t proposal_count = 0;
    std::int64_t rounds = 0;

    int num_matched() const;
    bool operator==(const Matching&) const = default;
};

// Equality of associations only, ignoring the counters.
bool same_assignment(const Matching& a, const Matching& b);

// Raised when a Matching violates its own invariants (mutual consistency,
// one-to-one, no active PU matched); distinct from a stability verdict.
class MatchingInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct MatchEvent {
    enum class Kind { propose, accept, reject_active, reject_held, displace };
    Kind kind;
    int round;
    int su;
    int pu;
    double offer;  // v_{su,pu} carried by the proposal (0 for displace of the old SU)
};

// Proposal rounds with deferred acceptance: every unmatched SU with untried
// list entries sends one proposal per round (ascending SU index unless
// su_order overrides it), each resolved immediately. Active PUs reject;
// an inactive PU holds the best offer seen so far and releases its previous
// holder, who resumes further down its list. Terminates once no unmatched SU
// has untried entries; the result may be partial.
Matching run_proposal_rounds(const ProposalTable& table, const PuUtility& u,
                             const std::vector<bool>& pu_active,
                             std::vector<MatchEvent>* trace = nullptr,
                             const std::vector<int>* su_order = nullptr);

// The proposed association algorithm: proposal rounds over lists filtered to
// strictly positive offers (the table must have been built that way).
Matching run_algorithm1(const ProposalTable& filtered, const PuUtility& u,
                        const std::vector<bool>& pu_active,
                        std::vector<MatchEvent>* trace = nullptr,
                        const std::vector<int>* su_order = nullptr);

// Classic deferred acceptance baseline: same engine on unfiltered lists.
Matching run_deferred_acceptance(const ProposalTable& full, const PuUtility& u,
                                 const std::vector<bool>& pu_active,
                                 std::vector<MatchEvent>* trace = nullptr,
                                 const std::vector<int>* su_order = nullptr);

// Baseline without sensing: every SU picks a band uniformly at random;
// collisions are allowed and handled by the rate model.
std::vector<int> run_random_allocation(const ScenarioConfig& cfg, const NetworkInstance& inst,
                                       std::uint64_t seed);

struct StabilityReport {
    bool stable = true;
    std::vector<std::pair<int, int>> blocking_pairs;  // (su, band)
};

// Exhaustive blocking-pair scan over the table's lists. A pair (m, n) blocks
// when n is inactive and listed by m, m is unmatched or ranks n above its
// current band, and n is unmatched or gains from swapping to m's offer.
// Throws MatchingInvariantError on an inconsistent matching.
StabilityReport is_stable(const Matching& matching, const ProposalTable& table,
                          const PuUtility& u, const std::vector<bool>& pu_active);

// Enumerates every partial one-to-one matching that respects the table's
// lists and PU activity, returning the stable ones. Oracle for small
// instances; throws std::invalid_argument when M or N exceeds 6.
std::vector<Matching> brute_force_stable_matchings(const ProposalTable& table, const PuUtility& u,
                                                   const std::vector<bool>& pu_active);

}  // namespace crn
