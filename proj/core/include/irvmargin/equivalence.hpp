#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "irvmargin/election.hpp"

namespace irvmargin {

/// Largest elimination order for which all 2^|order| classes are enumerated.
inline constexpr std::size_t kDefaultClassCap = 20;
inline constexpr std::size_t kHardClassCap = 30;

/// A class identified by which positions of the elimination order its
/// representative contains. Bit i set means order[i] is present; the
/// representative lists the present candidates in elimination order.
using ClassMask = std::uint32_t;

struct EquivalenceClass {
  ClassMask mask = 0;
  Ranking rep;
  bool operator==(const EquivalenceClass&) const = default;
};

/// Canonical class of `signature` with respect to `order`: keeps a candidate
/// iff it belongs to the order and no earlier preference on the signature is
/// eliminated after it. The result is a subsequence of `order`.
EquivalenceClass class_of(const Ranking& signature, const EliminationOrder& order);

/// Candidate a class counts toward in the round where order[round] is
/// eliminated: the first present position >= round. Empty means exhausted.
std::optional<std::size_t> counting_position(ClassMask mask, std::size_t round);

/// Representative ranking of a class mask.
Ranking class_rep(ClassMask mask, const EliminationOrder& order);

/// Every subsequence of `order`, ordered by mask value. Throws GuardError if
/// |order| exceeds `cap`.
std::vector<EquivalenceClass> enumerate_classes(const EliminationOrder& order,
                                                std::size_t cap = kDefaultClassCap);

/// Ballot counts per class for one elimination order.
class ClassTable {
 public:
  ClassTable(EliminationOrder order, std::vector<BallotCount> counts);

  const EliminationOrder& order() const { return order_; }
  std::size_t num_classes() const { return counts_.size(); }
  BallotCount count(ClassMask mask) const { return counts_.at(mask); }
  const std::vector<BallotCount>& counts() const { return counts_; }
  Ranking rep(ClassMask mask) const { return class_rep(mask, order_); }
  BallotCount total() const;

  /// Candidate `mask` counts toward at elimination round `round`.
  std::optional<CandidateId> counts_toward(ClassMask mask, std::size_t round) const;

 private:
  EliminationOrder order_;
  std::vector<BallotCount> counts_;
};

/// Groups the ballots of `election` by class. Total is conserved.
ClassTable class_counts(const Election& election, const EliminationOrder& order,
                        std::size_t cap = kDefaultClassCap);

/// Throws PreconditionError unless `order` is duplicate-free over the
/// candidates of `election`.
void validate_order(const Election& election, const EliminationOrder& order);

}  // namespace irvmargin
