#include "crn/matching.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "crn/rng.hpp"

namespace crn {

int Matching::num_matched() const {
    int count = 0;
    for (const auto& su : su_of_pu)
        if (su) ++count;
    return count;
}

bool same_assignment(const Matching& a, const Matching& b) {
    return a.su_of_pu == b.su_of_pu && a.pu_of_su == b.pu_of_su;
}

namespace {

void check_consistency(const Matching& matching, int m_count, int n_count,
                       const std::vector<bool>& pu_active) {
    if (static_cast<int>(matching.su_of_pu.size()) != n_count ||
        static_cast<int>(matching.pu_of_su.size()) != m_count)
        throw MatchingInvariantError("matching dimensions do not fit the instance");
    for (int n = 0; n < n_count; ++n) {
        if (!matching.su_of_pu[n]) continue;
        const int m = *matching.su_of_pu[n];
        if (m < 0 || m >= m_count || matching.pu_of_su[m] != std::optional<int>(n))
            throw MatchingInvariantError("su_of_pu[" + std::to_string(n) + "] is not mirrored");
        if (pu_active[n]) throw MatchingInvariantError("active PU " + std::to_string(n) + " is matched");
    }
    for (int m = 0; m < m_count; ++m) {
        if (!matching.pu_of_su[m]) continue;
        const int n = *matching.pu_of_su[m];
        if (n < 0 || n >= n_count || matching.su_of_pu[n] != std::optional<int>(m))
            throw MatchingInvariantError("pu_of_su[" + std::to_string(m) + "] is not mirrored");
    }
}

void emit(std::vector<MatchEvent>* trace, MatchEvent::Kind kind, int round, int su, int pu,
          double offer) {
    if (trace) trace->push_back({kind, round, su, pu, offer});
}

}  // namespace

Matching run_proposal_rounds(const ProposalTable& table, const PuUtility& u,
                             const std::vector<bool>& pu_active,
                             std::vector<MatchEvent>* trace,
                             const std::vector<int>* su_order) {
    const int m_count = table.num_sus();
    const int n_count = table.num_bands();

    std::vector<int> order;
    if (su_order) {
        if (static_cast<int>(su_order->size()) != m_count)
            throw std::invalid_argument("run_proposal_rounds: su_order must list every SU once");
        order = *su_order;
    } else {
        order.resize(m_count);
        std::iota(order.begin(), order.end(), 0);
    }

    Matching matching;
    matching.su_of_pu.assign(n_count, std::nullopt);
    matching.pu_of_su.assign(m_count, std::nullopt);

    std::vector<std::size_t> next_choice(m_count, 0);

    for (;;) {
        bool proposed_this_round = false;
        const int round = static_cast<int>(matching.rounds) + 1;
        for (int su : order) {
            if (matching.pu_of_su[su]) continue;
            const auto& list = table.pref_lists[su];
            if (next_choice[su] >= list.size()) continue;

            const int band = list[next_choice[su]++];
            const double offer = table.utility(su, band);
            ++matching.proposal_count;
            proposed_this_round = true;
            emit(trace, MatchEvent::Kind::propose, round, su, band, offer);

            if (pu_active[band]) {
                emit(trace, MatchEvent::Kind::reject_active, round, su, band, offer);
                continue;
            }
            auto& holder = matching.su_of_pu[band];
            if (!holder) {
                holder = su;
                matching.pu_of_su[su] = band;
                emit(trace, MatchEvent::Kind::accept, round, su, band, offer);
                continue;
            }
            const double held = table.utility(*holder, band);
            if (pu_prefers(u, offer, held)) {
                emit(trace, MatchEvent::Kind::displace, round, *holder, band, held);
                matching.pu_of_su[*holder] = std::nullopt;
                holder = su;
                matching.pu_of_su[su] = band;
                emit(trace, MatchEvent::Kind::accept, round, su, band, offer);
            } else {
                emit(trace, MatchEvent::Kind::reject_held, round, su, band, offer);
            }
        }
        if (!proposed_this_round) break;
        ++matching.rounds;
    }
    return matching;
}

Matching run_algorithm1(const ProposalTable& filtered, const PuUtility& u,
                        const std::vector<bool>& pu_active,
                        std::vector<MatchEvent>* trace, const std::vector<int>* su_order) {
    return run_proposal_rounds(filtered, u, pu_active, trace, su_order);
}

Matching run_deferred_acceptance(const ProposalTable& full, const PuUtility& u,
                                 const std::vector<bool>& pu_active,
                                 std::vector<MatchEvent>* trace, const std::vector<int>* su_order) {
    return run_proposal_rounds(full, u, pu_active, trace, su_order);
}

std::vector<int> run_random_allocation(const ScenarioConfig& cfg, const NetworkInstance&,
                                       std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> choices(static_cast<std::size_t>(cfg.num_sus));
    for (auto& c : choices) c = rng.uniform_int(cfg.num_pus);
    return choices;
}

StabilityReport is_stable(const Matching& matching, const ProposalTable& table,
                          const PuUtility& u, const std::vector<bool>& pu_active) {
    const int m_count = table.num_sus();
    const int n_count = table.num_bands();
    check_consistency(matching, m_count, n_count, pu_active);

    StabilityReport report;
    for (int su = 0; su < m_count; ++su) {
        const auto& list = table.pref_lists[su];
        // Rank of the current band inside this SU's list; anything at or
        // after it is not an improvement.
        std::size_t current_rank = list.size();
        if (matching.pu_of_su[su]) {
            const auto it = std::find(list.begin(), list.end(), *matching.pu_of_su[su]);
            current_rank = static_cast<std::size_t>(it - list.begin());
        }
        for (std::size_t pos = 0; pos < current_rank; ++pos) {
            const int band = list[pos];
            if (pu_active[band]) continue;
            const auto& holder = matching.su_of_pu[band];
            const bool pu_gains =
                !holder || pu_prefers(u, table.utility(su, band), table.utility(*holder, band));
            if (pu_gains) {
                report.stable = false;
                report.blocking_pairs.emplace_back(su, band);
            }
        }
    }
    return report;
}

namespace {

void enumerate_matchings(const ProposalTable& table, const std::vector<bool>& pu_active,
                         int su, Matching& current, const PuUtility& u,
                         std::vector<Matching>& stable_out) {
    const int m_count = table.num_sus();
    if (su == m_count) {
        if (is_stable(current, table, u, pu_active).stable) stable_out.push_back(current);
        return;
    }
    // Leave this SU unmatched.
    enumerate_matchings(table, pu_active, su + 1, current, u, stable_out);
    for (int band : table.pref_lists[su]) {
        if (pu_active[band] || current.su_of_pu[band]) continue;
        current.su_of_pu[band] = su;
        current.pu_of_su[su] = band;
        enumerate_matchings(table, pu_active, su + 1, current, u, stable_out);
        current.su_of_pu[band] = std::nullopt;
        current.pu_of_su[su] = std::nullopt;
    }
}

}  // namespace

std::vector<Matching> brute_force_stable_matchings(const ProposalTable& table, const PuUtility& u,
                                                   const std::vector<bool>& pu_active) {
    const int m_count = table.num_sus();
    const int n_count = table.num_bands();
    if (m_count > 6 || n_count > 6)
        throw std::invalid_argument("brute_force_stable_matchings: limited to M, N <= 6");

    Matching current;
    current.su_of_pu.assign(n_count, std::nullopt);
    current.pu_of_su.assign(m_count, std::nullopt);

    std::vector<Matching> stable;
    enumerate_matchings(table, pu_active, 0, current, u, stable);
    return stable;
}

}  // namespace crn
