#pragma once

#include <vector>

#include "irvmargin/election.hpp"

namespace irvmargin {

/// How tabulation picks among candidates tied on the lowest tally.
enum class TiePolicy {
  lexicographic,  ///< eliminate the tied candidate whose name sorts first
  by_index,       ///< eliminate the tied candidate with the lowest index
};

std::string_view to_string(TiePolicy policy);
TiePolicy tie_policy_from_string(std::string_view text);

struct TieEvent {
  std::size_t round = 0;                ///< zero-based counting round
  std::vector<CandidateId> candidates;  ///< all candidates sharing the lowest tally
  bool operator==(const TieEvent&) const = default;
};

struct RoundTally {
  CandidateSet standing;
  std::vector<BallotCount> tallies;  ///< indexed by candidate, zero if not standing
  BallotCount exhausted = 0;
  bool operator==(const RoundTally&) const = default;
};

struct TabulationResult {
  CandidateId winner = 0;
  EliminationOrder elimination_order;  ///< first eliminated first; excludes the winner
  std::vector<RoundTally> rounds;      ///< one per counting round, including the final one
  std::vector<TieEvent> tie_events;

  /// Elimination order followed by the winner.
  EliminationOrder full_order() const;
  bool had_ties() const { return !tie_events.empty(); }
};

/// Standard IRV count: repeatedly eliminate the standing candidate with the
/// smallest tally until one remains. Throws PreconditionError with zero
/// candidates.
TabulationResult run_irv(const Election& election, TiePolicy policy = TiePolicy::lexicographic);

/// Half the final-round tally gap, rounded up.
BallotCount last_round_margin(const Election& election,
                              TiePolicy policy = TiePolicy::lexicographic);

/// Final-round tally gap, not halved. Used by the addition and deletion
/// variants.
BallotCount last_round_margin_add(const Election& election,
                                  TiePolicy policy = TiePolicy::lexicographic);

/// Both margins from an existing tabulation.
BallotCount last_round_margin(const TabulationResult& result);
BallotCount last_round_margin_add(const TabulationResult& result);

}  // namespace irvmargin
