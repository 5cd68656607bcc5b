#pragma once

#include <cstdint>
#include <optional>

#include "irvmargin/tabulator.hpp"

namespace irvmargin {

/// Reference implementations that enumerate ballot edits directly. They share
/// no code with the distance programs or the search and are meant for small
/// instances only.

struct OracleLimits {
  std::size_t max_candidates = 4;
  BallotCount max_ballots = 40;
};

/// Every candidate that wins under some tie-breaking of the elimination steps.
CandidateSet possible_winners(const Election& election);

/// True when `order` (full, winner last) is an elimination order under some
/// tie-breaking: at each round the eliminated candidate holds no more than any
/// other standing candidate.
bool admits_order(const Election& election, const EliminationOrder& order);

struct EditBudget {
  BallotCount k = 0;  ///< most ballots manipulated
  Mode mode = Mode::modify;
};

/// Smallest number of ballot edits, at most `budget.k`, after which a
/// candidate other than the tabulated winner is a possible winner. Modify
/// replaces ballots, add inserts them, delete removes them. Returns nullopt
/// when no edit within the budget works. Throws GuardError outside `limits`.
std::optional<BallotCount> edit_oracle(const Election& election, EditBudget budget,
                                       TiePolicy tie_policy = TiePolicy::lexicographic,
                                       OracleLimits limits = {});

/// edit_oracle with the budget set to the last-round margin of the mode,
/// which always suffices.
BallotCount edit_margin(const Election& election, Mode mode,
                        TiePolicy tie_policy = TiePolicy::lexicographic, OracleLimits limits = {});

/// Smallest number of edits, up to `budget`, after which `order` is admitted.
std::optional<BallotCount> order_edit_oracle(const Election& election,
                                             const EliminationOrder& order, Mode mode,
                                             BallotCount budget, OracleLimits limits = {});

/// Seeded random election with candidates named A, B, C, ... Rankings are
/// uniform random prefixes of uniform random permutations; counts are split
/// among `groups` rankings (merged if they coincide). Deterministic across
/// platforms for a given seed.
Election random_election(std::uint64_t seed, std::size_t num_candidates, BallotCount num_ballots,
                         std::size_t groups);

}  // namespace irvmargin
