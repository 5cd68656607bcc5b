#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irvmargin/types.hpp"

namespace irvmargin {

/// A distinct ranking together with the number of ballots that cast it.
struct BallotGroup {
  Ranking ranking;
  BallotCount count = 0;

  bool operator==(const BallotGroup&) const = default;
};

/// Immutable multiset of ranked ballots over a fixed candidate list.
///
/// Candidates are addressed by dense index; names are only used at the I/O
/// boundary. Groups are canonical: each distinct ranking appears once with a
/// positive count.
class Election {
 public:
  Election() = default;

  /// Builds an election, merging duplicate rankings. Throws ParseError on a
  /// duplicate or empty candidate name, PreconditionError on an invalid
  /// ranking or non-positive count.
  Election(std::vector<std::string> candidate_names, std::vector<BallotGroup> groups);

  std::size_t num_candidates() const { return names_.size(); }
  CandidateSet candidates() const { return CandidateSet::all(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(CandidateId c) const { return names_.at(c); }
  std::optional<CandidateId> find(std::string_view name) const;

  const std::vector<BallotGroup>& groups() const { return groups_; }
  BallotCount total_ballots() const { return total_; }

  bool operator==(const Election&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<BallotGroup> groups_;
  BallotCount total_ = 0;
};

/// Parses the line-oriented ballot format:
///
///     candidates: A,B,C
///     # comment
///     40: A,C,B
///     3:
///
/// The first non-blank, non-comment line is the candidate header. A body line
/// with nothing after the colon is an empty (immediately exhausted) ranking.
Election parse_election(std::string_view text);

/// Reads and parses a ballot file. Throws Error when the file cannot be read.
Election load_election(const std::string& path);

/// Inverse of parse_election, groups in stored order.
std::string format_election(const Election& election);

/// Subsequence of `ranking` restricted to `standing`, order preserved.
Ranking project(const Ranking& ranking, CandidateSet standing);

/// First candidate of `ranking` that is in `standing`, if any.
std::optional<CandidateId> first_standing(const Ranking& ranking, CandidateSet standing);

/// Ballots whose projection onto `standing` begins with `c`.
BallotCount tally(const Election& election, CandidateSet standing, CandidateId c);

/// Tallies of every candidate for one standing set, indexed by candidate.
/// Entries for candidates outside `standing` are zero.
std::vector<BallotCount> tallies(const Election& election, CandidateSet standing);

/// Ballots whose projection onto `standing` is empty.
BallotCount exhausted(const Election& election, CandidateSet standing);

/// f(c): ballots ranking `c` first.
BallotCount primary_vote(const Election& election, CandidateId c);

/// Ballots on which `c` precedes `x`, or `c` appears and `x` does not.
BallotCount delta(const Election& election, CandidateId c, CandidateId x);

/// Most ballots `c` can hold when `x` is eliminated with exactly `standing`
/// still in the count. Requires c != x and both in `standing`.
BallotCount delta_standing(const Election& election, CandidateId c, CandidateId x,
                           CandidateSet standing);

}  // namespace irvmargin
