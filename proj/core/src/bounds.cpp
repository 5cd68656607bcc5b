#include "irvmargin/bounds.hpp"

#include <algorithm>

namespace irvmargin {

std::string_view to_string(BoundKind kind) { return kind == BoundKind::lb1 ? "lb1" : "lb2"; }

BoundKind bound_kind_from_string(std::string_view text) {
  if (text == "lb1") return BoundKind::lb1;
  if (text == "lb2") return BoundKind::lb2;
  throw PreconditionError("unknown bound rule '" + std::string(text) + "'");
}

BoundMode bound_mode_for(Mode mode) {
  return mode == Mode::modify ? BoundMode::modify : BoundMode::add_or_delete;
}

namespace {

BallotCount deficit(BallotCount need, BallotCount have, BoundMode mode) {
  BallotCount d = need - have;
  if (d <= 0) return 0;
  return mode == BoundMode::modify ? (d + 1) / 2 : d;
}

CandidateSet order_set(const Election& e, const EliminationOrder& order) {
  CandidateSet s;
  for (CandidateId c : order) {
    if (c >= e.num_candidates()) throw PreconditionError("order mentions an unknown candidate");
    s.insert(c);
  }
  return s;
}

BallotCount l2_impl(const Election& e, CandidateId c, CandidateId x, const EliminationOrder& order,
                    BoundMode mode) {
  CandidateSet members = order_set(e, order);
  if (!members.contains(c) || members.contains(x) || x >= e.num_candidates()) {
    throw PreconditionError("l2 needs c inside the order and x outside it");
  }
  CandidateSet standing = members.with(x);
  return deficit(primary_vote(e, x), delta_standing(e, c, x, standing), mode);
}

BallotCount lb1_impl(const Election& e, const EliminationOrder& order, BoundMode mode) {
  CandidateSet members = order_set(e, order);
  BallotCount best = 0;
  for (CandidateId x : (e.candidates() - members).members()) {
    for (CandidateId c : members.members()) {
      best = std::max(best, deficit(primary_vote(e, x), delta(e, c, x), mode));
    }
  }
  return best;
}

BallotCount lb2_impl(const Election& e, const EliminationOrder& order, BoundMode mode) {
  CandidateSet members = order_set(e, order);
  BallotCount best = 0;
  for (CandidateId x : (e.candidates() - members).members()) {
    for (CandidateId c : members.members()) {
      best = std::max(best, l2_impl(e, c, x, order, mode));
    }
  }
  return best;
}

}  // namespace

BallotCount l1(const Election& e, CandidateId c, CandidateId x) {
  return deficit(primary_vote(e, x), delta(e, c, x), BoundMode::modify);
}
BallotCount lb1(const Election& e, const EliminationOrder& order) {
  return lb1_impl(e, order, BoundMode::modify);
}
BallotCount l2(const Election& e, CandidateId c, CandidateId x, const EliminationOrder& order) {
  return l2_impl(e, c, x, order, BoundMode::modify);
}
BallotCount lb2(const Election& e, const EliminationOrder& order) {
  return lb2_impl(e, order, BoundMode::modify);
}

BallotCount l1_add(const Election& e, CandidateId c, CandidateId x) {
  return deficit(primary_vote(e, x), delta(e, c, x), BoundMode::add_or_delete);
}
BallotCount lb1_add(const Election& e, const EliminationOrder& order) {
  return lb1_impl(e, order, BoundMode::add_or_delete);
}
BallotCount l2_add(const Election& e, CandidateId c, CandidateId x, const EliminationOrder& order) {
  return l2_impl(e, c, x, order, BoundMode::add_or_delete);
}
BallotCount lb2_add(const Election& e, const EliminationOrder& order) {
  return lb2_impl(e, order, BoundMode::add_or_delete);
}

BoundEvaluator::BoundEvaluator(const Election& election)
    : election_(election),
      n_(election.num_candidates()),
      primary_(n_, 0),
      delta_(n_ * n_, 0) {
  for (CandidateId c = 0; c < n_; ++c) {
    primary_[c] = primary_vote(election, c);
    for (CandidateId x = 0; x < n_; ++x) {
      if (c != x) delta_[c * n_ + x] = delta(election, c, x);
    }
  }
}

std::vector<BallotCount> BoundEvaluator::standing_tallies(CandidateSet standing) const {
  {
    std::lock_guard lock(mutex_);
    auto it = tallies_.find(standing.bits());
    if (it != tallies_.end()) return it->second;
  }
  auto t = tallies(election_, standing);
  std::lock_guard lock(mutex_);
  return tallies_.emplace(standing.bits(), std::move(t)).first->second;
}

BallotCount BoundEvaluator::evaluate(BoundRule rule, CandidateSet members) const {
  BallotCount best = 0;
  const auto inside = members.members();
  for (CandidateId x : (election_.candidates() - members).members()) {
    if (rule.kind == BoundKind::lb1) {
      for (CandidateId c : inside) {
        best = std::max(best, deficit(primary_[x], pairwise(c, x), rule.mode));
      }
    } else {
      auto t = standing_tallies(members.with(x));
      for (CandidateId c : inside) best = std::max(best, deficit(primary_[x], t[c], rule.mode));
    }
  }
  return best;
}

}  // namespace irvmargin
