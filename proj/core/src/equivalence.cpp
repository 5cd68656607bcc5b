#include "irvmargin/equivalence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace irvmargin {

namespace {

constexpr int kAbsent = -1;

// position of each candidate in `order`, or kAbsent
std::array<int, kMaxCandidates> positions(const EliminationOrder& order) {
  std::array<int, kMaxCandidates> pos;
  pos.fill(kAbsent);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= kMaxCandidates || pos[order[i]] != kAbsent) {
      throw PreconditionError("elimination order must be duplicate-free");
    }
    pos[order[i]] = static_cast<int>(i);
  }
  return pos;
}

ClassMask mask_of(const Ranking& signature, const std::array<int, kMaxCandidates>& pos) {
  ClassMask mask = 0;
  int latest = kAbsent;
  for (CandidateId c : signature) {
    int p = c < kMaxCandidates ? pos[c] : kAbsent;
    if (p > latest) {
      mask |= ClassMask{1} << p;
      latest = p;
    }
  }
  return mask;
}

void check_cap(std::size_t length, std::size_t cap) {
  if (length > cap || length > kHardClassCap) {
    throw GuardError("elimination order of length " + std::to_string(length) +
                     " exceeds the class enumeration cap of " +
                     std::to_string(std::min(cap, kHardClassCap)));
  }
}

}  // namespace

Ranking class_rep(ClassMask mask, const EliminationOrder& order) {
  Ranking rep;
  for (ClassMask b = mask; b != 0; b &= b - 1) {
    rep.push_back(order.at(static_cast<std::size_t>(std::countr_zero(b))));
  }
  return rep;
}

EquivalenceClass class_of(const Ranking& signature, const EliminationOrder& order) {
  ClassMask mask = mask_of(signature, positions(order));
  return {mask, class_rep(mask, order)};
}

std::optional<std::size_t> counting_position(ClassMask mask, std::size_t round) {
  if (round >= 32) return std::nullopt;
  ClassMask rest = mask & ~((ClassMask{1} << round) - 1);
  if (rest == 0) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(rest));
}

std::vector<EquivalenceClass> enumerate_classes(const EliminationOrder& order, std::size_t cap) {
  check_cap(order.size(), cap);
  positions(order);
  const ClassMask n = ClassMask{1} << order.size();
  std::vector<EquivalenceClass> out;
  out.reserve(n);
  for (ClassMask m = 0; m < n; ++m) out.push_back({m, class_rep(m, order)});
  return out;
}

ClassTable::ClassTable(EliminationOrder order, std::vector<BallotCount> counts)
    : order_(std::move(order)), counts_(std::move(counts)) {
  if (counts_.size() != (std::size_t{1} << order_.size())) {
    throw PreconditionError("class table needs one count per subsequence of the order");
  }
}

BallotCount ClassTable::total() const {
  BallotCount t = 0;
  for (auto c : counts_) t += c;
  return t;
}

std::optional<CandidateId> ClassTable::counts_toward(ClassMask mask, std::size_t round) const {
  auto p = counting_position(mask, round);
  if (!p) return std::nullopt;
  return order_[*p];
}

ClassTable class_counts(const Election& election, const EliminationOrder& order,
                        std::size_t cap) {
  validate_order(election, order);
  check_cap(order.size(), cap);
  auto pos = positions(order);
  std::vector<BallotCount> counts(std::size_t{1} << order.size(), 0);
  for (const auto& g : election.groups()) counts[mask_of(g.ranking, pos)] += g.count;
  return ClassTable(order, std::move(counts));
}

void validate_order(const Election& election, const EliminationOrder& order) {
  for (CandidateId c : order) {
    if (c >= election.num_candidates()) {
      throw PreconditionError("elimination order mentions an unknown candidate");
    }
  }
  positions(order);
}

}  // namespace irvmargin
