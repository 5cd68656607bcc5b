#include "irvmargin/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <limits>
#include <string>


namespace irvmargin {
namespace {

// Ballot profile over a fixed list of ballot types, with the first standing
// candidate of every type precomputed for every standing set.
class Profile {
 public:
  Profile(std::size_t num_candidates, std::vector<Ranking> types, std::vector<BallotCount> counts)
      : n_(num_candidates), types_(std::move(types)), counts_(std::move(counts)) {
    const std::size_t masks = std::size_t{1} << n_;
    first_.assign(types_.size() * masks, kNone);
    for (std::size_t t = 0; t < types_.size(); ++t) {
      for (std::size_t s = 0; s < masks; ++s) {
        if (auto c = first_standing(types_[t], CandidateSet(s))) first_[t * masks + s] = *c;
      }
    }
  }

  std::size_t num_types() const { return types_.size(); }
  BallotCount& count(std::size_t t) { return counts_[t]; }

  std::vector<BallotCount> tallies(std::uint64_t standing) const {
    std::vector<BallotCount> out(n_, 0);
    const std::size_t masks = std::size_t{1} << n_;
    for (std::size_t t = 0; t < types_.size(); ++t) {
      CandidateId c = first_[t * masks + standing];
      if (c != kNone) out[c] += counts_[t];
    }
    return out;
  }

  CandidateSet possible_winners() const {
    std::vector<std::optional<CandidateSet>> memo(std::size_t{1} << n_);
    std::function<CandidateSet(std::uint64_t)> winners = [&](std::uint64_t standing) {
      if (memo[standing]) return *memo[standing];
      CandidateSet out;
      const CandidateSet s(standing);
      if (s.size() == 1) {
        out = s;
      } else {
        auto t = tallies(standing);
        BallotCount low = std::numeric_limits<BallotCount>::max();
        for (CandidateId c : s.members()) low = std::min(low, t[c]);
        for (CandidateId c : s.members()) {
          if (t[c] == low) out = out | winners(s.without(c).bits());
        }
      }
      memo[standing] = out;
      return out;
    };
    return winners(CandidateSet::all(n_).bits());
  }

  bool admits(const EliminationOrder& order) const {
    CandidateSet standing = CandidateSet::all(n_);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      auto t = tallies(standing.bits());
      for (CandidateId c : standing.members()) {
        if (t[order[i]] > t[c]) return false;
      }
      standing.erase(order[i]);
    }
    return true;
  }

 private:
  static constexpr CandidateId kNone = ~CandidateId{0};
  std::size_t n_;
  std::vector<Ranking> types_;
  std::vector<BallotCount> counts_;
  std::vector<CandidateId> first_;
};

Profile profile_of(const Election& e) {
  std::vector<Ranking> types;
  std::vector<BallotCount> counts;
  for (const auto& g : e.groups()) {
    types.push_back(g.ranking);
    counts.push_back(g.count);
  }
  return Profile(e.num_candidates(), std::move(types), std::move(counts));
}

// Every ranking of length 0 .. n-1. A complete ranking behaves exactly like
// its prefix without the last candidate, so these cover every ballot.
std::vector<Ranking> addable_rankings(std::size_t n) {
  std::vector<Ranking> out;
  std::function<void(Ranking&, CandidateSet)> extend = [&](Ranking& prefix, CandidateSet used) {
    out.push_back(prefix);
    if (prefix.size() + 1 >= n) return;
    for (CandidateId c = 0; c < n; ++c) {
      if (used.contains(c)) continue;
      prefix.push_back(c);
      extend(prefix, used.with(c));
      prefix.pop_back();
    }
  };
  Ranking prefix;
  extend(prefix, CandidateSet());
  return out;
}

void check_limits(const Election& e, OracleLimits limits) {
  if (e.num_candidates() < 2) throw PreconditionError("oracle needs at least two candidates");
  if (e.num_candidates() > limits.max_candidates || e.total_ballots() > limits.max_ballots) {
    throw GuardError("election exceeds the edit oracle limits");
  }
}

// Iterative deepening over edit counts. Removals come out of existing ballot
// groups, additions from every ranking type; both enumerated as multisets.
std::optional<BallotCount> min_edits(const Election& e, Mode mode, BallotCount budget,
                                     const std::function<bool(const Profile&)>& success) {
  std::vector<Ranking> types;
  std::vector<BallotCount> counts;
  const std::size_t existing = e.groups().size();
  for (const auto& g : e.groups()) {
    types.push_back(g.ranking);
    counts.push_back(g.count);
  }
  for (auto& r : addable_rankings(e.num_candidates())) {
    types.push_back(std::move(r));
    counts.push_back(0);
  }
  Profile p(e.num_candidates(), std::move(types), std::move(counts));

  std::function<bool(std::size_t, BallotCount)> add = [&](std::size_t from, BallotCount left) {
    if (left == 0) return success(p);
    for (std::size_t t = from; t < p.num_types(); ++t) {
      if (t < existing) continue;
      ++p.count(t);
      bool found = add(t, left - 1);
      --p.count(t);
      if (found) return true;
    }
    return false;
  };
  std::function<bool(std::size_t, BallotCount, BallotCount)> remove =
      [&](std::size_t from, BallotCount left, BallotCount additions) {
        if (left == 0) return add(0, additions);
        for (std::size_t t = from; t < existing; ++t) {
          if (p.count(t) == 0) continue;
          --p.count(t);
          bool found = remove(t, left - 1, additions);
          ++p.count(t);
          if (found) return true;
        }
        return false;
      };

  for (BallotCount r = 0; r <= budget; ++r) {
    BallotCount removals = mode == Mode::add ? 0 : r;
    BallotCount additions = mode == Mode::remove ? 0 : r;
    if (remove(0, removals, additions)) return r;
  }
  return std::nullopt;
}

// Uniform draw in [0, bound) by rejection, independent of the standard
// library's distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

}  // namespace

CandidateSet possible_winners(const Election& election) {
  if (election.num_candidates() == 0) throw PreconditionError("election has no candidates");
  if (election.num_candidates() > 20) throw GuardError("too many candidates for tie enumeration");
  return profile_of(election).possible_winners();
}

bool admits_order(const Election& election, const EliminationOrder& order) {
  if (order.size() != election.num_candidates() ||
      CandidateSet::of(order) != election.candidates()) {
    throw PreconditionError("order must list every candidate once");
  }
  if (election.num_candidates() > 20) throw GuardError("too many candidates");
  return profile_of(election).admits(order);
}

std::optional<BallotCount> edit_oracle(const Election& election, EditBudget budget,
                                       TiePolicy tie_policy, OracleLimits limits) {
  check_limits(election, limits);
  if (budget.k < 0) throw PreconditionError("edit budget must be non-negative");
  const CandidateId winner = run_irv(election, tie_policy).winner;
  const CandidateSet others = election.candidates().without(winner);
  return min_edits(election, budget.mode, budget.k,
                   [&](const Profile& p) { return !(p.possible_winners() & others).empty(); });
}

BallotCount edit_margin(const Election& election, Mode mode, TiePolicy tie_policy,
                        OracleLimits limits) {
  check_limits(election, limits);
  auto tabulation = run_irv(election, tie_policy);
  BallotCount k = mode == Mode::modify ? last_round_margin(tabulation)
                                       : last_round_margin_add(tabulation);
  auto found = edit_oracle(election, {k, mode}, tie_policy, limits);
  if (!found) throw Error("no winner-changing edit within the last-round margin");
  return *found;
}

std::optional<BallotCount> order_edit_oracle(const Election& election,
                                             const EliminationOrder& order, Mode mode,
                                             BallotCount budget, OracleLimits limits) {
  check_limits(election, limits);
  if (order.size() != election.num_candidates() ||
      CandidateSet::of(order) != election.candidates()) {
    throw PreconditionError("order must list every candidate once");
  }
  return min_edits(election, mode, budget, [&](const Profile& p) { return p.admits(order); });
}

Election random_election(std::uint64_t seed, std::size_t num_candidates, BallotCount num_ballots,
                         std::size_t groups) {
  if (num_candidates == 0 || num_candidates > 26) {
    throw PreconditionError("random elections use 1 to 26 candidates");
  }
  if (groups == 0 || num_ballots < static_cast<BallotCount>(groups)) {
    throw PreconditionError("need at least one ballot per group");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_candidates; ++i) names.emplace_back(1, static_cast<char>('A' + i));

  std::vector<BallotCount> counts(groups, 1);
  for (BallotCount b = static_cast<BallotCount>(groups); b < num_ballots; ++b) {
    ++counts[draw(rng, groups)];
  }
  std::vector<BallotGroup> out;
  for (std::size_t g = 0; g < groups; ++g) {
    Ranking perm(num_candidates);
    for (std::size_t i = 0; i < num_candidates; ++i) perm[i] = static_cast<CandidateId>(i);
    for (std::size_t i = num_candidates; i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
    perm.resize(1 + draw(rng, num_candidates));
    out.push_back({std::move(perm), counts[g]});
  }
  return Election(std::move(names), std::move(out));
}

}  // namespace irvmargin
