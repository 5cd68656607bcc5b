#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "irvmargin/election.hpp"

namespace irvmargin {

enum class BoundKind { lb1, lb2 };

/// Modify bounds halve the deficit (one changed ballot moves two tallies);
/// addition and deletion bounds do not.
enum class BoundMode { modify, add_or_delete };

struct BoundRule {
  BoundKind kind = BoundKind::lb2;
  BoundMode mode = BoundMode::modify;
};

std::string_view to_string(BoundKind kind);
BoundKind bound_kind_from_string(std::string_view text);
BoundMode bound_mode_for(Mode mode);

// Closed forms, computed directly from the ballots. All clamp at zero.

/// Ballots needed so `x` can be eliminated while `c` stands, using only
/// pairwise information: ceil((f(x) - delta(c, x)) / 2).
BallotCount l1(const Election& e, CandidateId c, CandidateId x);
/// Max of l1 over c in the order and x outside it; 0 if nothing is outside.
BallotCount lb1(const Election& e, const EliminationOrder& order);
/// As l1, but `c` can only hold ballots on which it leads {x} + order.
BallotCount l2(const Election& e, CandidateId c, CandidateId x, const EliminationOrder& order);
BallotCount lb2(const Election& e, const EliminationOrder& order);

BallotCount l1_add(const Election& e, CandidateId c, CandidateId x);
BallotCount lb1_add(const Election& e, const EliminationOrder& order);
BallotCount l2_add(const Election& e, CandidateId c, CandidateId x, const EliminationOrder& order);
BallotCount lb2_add(const Election& e, const EliminationOrder& order);

/// Memoised bound evaluation for the search. Primary votes and pairwise
/// deltas are precomputed; tallies per standing set are cached on demand.
/// Safe to share between threads.
class BoundEvaluator {
 public:
  explicit BoundEvaluator(const Election& election);

  /// Bound for the last-standing set `members`. Order within the elimination
  /// order does not matter to either rule.
  BallotCount evaluate(BoundRule rule, CandidateSet members) const;

  BallotCount primary(CandidateId c) const { return primary_[c]; }
  BallotCount pairwise(CandidateId c, CandidateId x) const { return delta_[c * n_ + x]; }
  /// Tally of every candidate with `standing` in the count.
  std::vector<BallotCount> standing_tallies(CandidateSet standing) const;

 private:
  const Election& election_;
  std::size_t n_;
  std::vector<BallotCount> primary_;
  std::vector<BallotCount> delta_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::vector<BallotCount>> tallies_;
};

}  // namespace irvmargin
