#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "irvmargin/bounds.hpp"
#include "irvmargin/distance.hpp"
#include "irvmargin/tabulator.hpp"

namespace irvmargin {

enum class Algorithm { margin, mrsw, exhaustive };

std::string_view to_string(Algorithm algorithm);
Algorithm algorithm_from_string(std::string_view text);

/// Largest candidate count the exhaustive oracle accepts.
inline constexpr std::size_t kExhaustiveCandidateLimit = 6;

struct SearchStats {
  std::size_t nodes_scored = 0;
  std::size_t nodes_expanded = 0;
  std::size_t lps_solved = 0;      ///< distance programs evaluated
  std::size_t lp_relaxations = 0;  ///< continuous solves, including integrality branching
  double elapsed_ms = 0.0;

  bool operator==(const SearchStats&) const = default;
};

/// One scoring or expansion step, recorded when a trace is requested.
struct TraceEvent {
  enum class Kind { scored, expanded };
  Kind kind = Kind::scored;
  EliminationOrder order;
  BallotCount score = 0;
  std::optional<BallotCount> distance;  ///< distance program value, when one was solved
  bool enqueued = false;
};

struct MarginReport {
  BallotCount margin = 0;
  Mode mode = Mode::modify;
  Algorithm algorithm = Algorithm::margin;
  BoundKind bound = BoundKind::lb2;
  BallotCount lrm = 0;      ///< halved last-round margin
  BallotCount lrm_add = 0;  ///< unhalved last-round margin
  CandidateId winner = 0;
  EliminationOrder elimination_order;  ///< tabulated order, winner last
  std::optional<EliminationOrder> witness_order;
  std::optional<BallotCount> cap;
  /// The margin equals cap + 1: no manipulation of at most `cap` ballots
  /// changes the winner.
  bool capped = false;
  /// Tabulation met a tie; the margin may understate the true one.
  bool tie_caveat = false;
  std::size_t num_candidates = 0;
  BallotCount num_ballots = 0;
  SearchStats stats;

  bool operator==(const MarginReport&) const = default;
};

struct SearchOptions {
  Mode mode = Mode::modify;
  BoundKind bound = BoundKind::lb2;
  std::optional<BallotCount> cap;
  TiePolicy tie_policy = TiePolicy::lexicographic;
  std::size_t threads = 1;
  /// Disables every score-versus-upper-bound test; for checking prune safety.
  bool pruning = true;
  std::size_t class_cap = kDefaultClassCap;
  const lp::Solver* solver = nullptr;
  /// Called with every distance program before it is solved. May be invoked
  /// concurrently when threads > 1.
  std::function<void(const EliminationOrder&, const DistanceModel&)> on_model;
  std::vector<TraceEvent>* trace = nullptr;
};

/// Best-first branch and bound over partial elimination orders. Children are
/// scored by the closed-form bound first and only get a distance program
/// when that score is still below the incumbent; leaves are solved
/// integrally. Requires at least two candidates.
MarginReport compute_margin(const Election& election, const SearchOptions& options = {});

/// Baseline branch and bound: root children enter with score zero and every
/// other node is scored by its distance program.
MarginReport mrsw_baseline(const Election& election, const SearchOptions& options = {});

/// Minimum exact distance over every full elimination order whose last
/// candidate is not the winner. No pruning. Throws GuardError above
/// kExhaustiveCandidateLimit candidates.
MarginReport exhaustive_margin(const Election& election, const SearchOptions& options = {});

MarginReport run_algorithm(Algorithm algorithm, const Election& election,
                           const SearchOptions& options = {});

struct LeafDistance {
  EliminationOrder order;
  BallotCount distance;
};

/// Exact distance of every full elimination order, in lexicographic order of
/// candidate indices.
std::vector<LeafDistance> all_leaf_distances(const Election& election, Mode mode,
                                             const lp::Solver& solver = lp::default_solver());

}  // namespace irvmargin
