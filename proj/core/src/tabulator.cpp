#include "irvmargin/tabulator.hpp"

#include <algorithm>
#include <cstdlib>

namespace irvmargin {

std::string_view to_string(TiePolicy policy) {
  return policy == TiePolicy::lexicographic ? "lexicographic" : "by_index";
}

TiePolicy tie_policy_from_string(std::string_view text) {
  if (text == "lexicographic") return TiePolicy::lexicographic;
  if (text == "by_index") return TiePolicy::by_index;
  throw PreconditionError("unknown tie policy '" + std::string(text) + "'");
}

EliminationOrder TabulationResult::full_order() const {
  EliminationOrder order = elimination_order;
  order.push_back(winner);
  return order;
}

TabulationResult run_irv(const Election& election, TiePolicy policy) {
  if (election.num_candidates() == 0) throw PreconditionError("election has no candidates");

  TabulationResult result;
  CandidateSet standing = election.candidates();
  for (std::size_t round = 0;; ++round) {
    RoundTally rt{standing, tallies(election, standing), exhausted(election, standing)};
    result.rounds.push_back(rt);
    if (standing.size() == 1) break;

    auto members = standing.members();
    BallotCount lowest = rt.tallies[members.front()];
    for (CandidateId c : members) lowest = std::min(lowest, rt.tallies[c]);

    std::vector<CandidateId> tied;
    for (CandidateId c : members) {
      if (rt.tallies[c] == lowest) tied.push_back(c);
    }
    CandidateId loser = tied.front();
    if (tied.size() > 1) {
      if (policy == TiePolicy::lexicographic) {
        loser = *std::min_element(tied.begin(), tied.end(), [&](CandidateId a, CandidateId b) {
          return election.name(a) < election.name(b);
        });
      }
      result.tie_events.push_back({round, tied});
    }
    result.elimination_order.push_back(loser);
    standing.erase(loser);
  }
  result.winner = standing.members().front();
  return result;
}

BallotCount last_round_margin_add(const TabulationResult& result) {
  if (result.rounds.size() < 2) {
    throw PreconditionError("last round margin needs at least two candidates");
  }
  const auto& final_two = result.rounds[result.rounds.size() - 2];
  auto members = final_two.standing.members();
  return std::abs(final_two.tallies[members[0]] - final_two.tallies[members[1]]);
}

BallotCount last_round_margin(const TabulationResult& result) {
  return (last_round_margin_add(result) + 1) / 2;
}

BallotCount last_round_margin(const Election& election, TiePolicy policy) {
  if (election.num_candidates() < 2) {
    throw PreconditionError("last round margin needs at least two candidates");
  }
  return last_round_margin(run_irv(election, policy));
}

BallotCount last_round_margin_add(const Election& election, TiePolicy policy) {
  if (election.num_candidates() < 2) {
    throw PreconditionError("last round margin needs at least two candidates");
  }
  return last_round_margin_add(run_irv(election, policy));
}

}  // namespace irvmargin
