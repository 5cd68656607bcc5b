#pragma once

#include <optional>
#include <vector>

#include "irvmargin/equivalence.hpp"
#include "irvmargin/lp.hpp"

namespace irvmargin {

/// The program that measures how many ballots must change for an election,
/// reduced to the candidates of `order`, to eliminate them in that order.
///
/// Per class S of the order:
///   q_S  ballots changed to S (modify) or added with signature S (add)
///   m_S  ballots changed away from S (modify) or deleted from S (delete)
///   y_S  ballots with signature S after manipulation
///
/// with y_S = n_S + q_S - m_S, 0 <= y_S <= n, 0 <= m_S <= n_S, q_S >= 0.
/// Modify mode adds sum q = sum m. For every pair of rounds i < j the
/// candidate eliminated at round i holds no more ballots than order[j] at
/// round i (ties go the adversary's way). The empty class takes part in the
/// balance but never in the elimination constraints.
struct DistanceModel {
  Mode mode = Mode::modify;
  ClassTable classes;
  lp::Model program;
  /// Variable index per class mask, absent where the mode drops the variable.
  std::vector<std::optional<std::size_t>> q, m, y;
  std::size_t num_elimination_constraints = 0;
  bool has_balance_constraint = false;
};

/// Throws PreconditionError when |order| < 2 or the order is invalid,
/// GuardError when |order| exceeds `class_cap`.
DistanceModel build_distance_lp(const EliminationOrder& order, const Election& election,
                                Mode mode, std::size_t class_cap = kDefaultClassCap);

struct DistanceResult {
  BallotCount value = 0;    ///< ceil of the LP optimum, or the integral optimum when exact
  Rational lp_optimum;      ///< continuous optimum
  bool integral = false;    ///< continuous optimum already integral in every class variable
  std::size_t relaxations = 0;
  std::vector<Rational> profile;  ///< y_S per class mask at the reported solution
};

/// Evaluates a built model. `exact` requests an integral optimum. Throws
/// Error if the model is infeasible or unbounded, which never happens for a
/// correctly built model.
DistanceResult solve_distance(const DistanceModel& model, bool exact,
                              const lp::Solver& solver = lp::default_solver());

DistanceResult distance_to(const EliminationOrder& order, const Election& election, Mode mode,
                           bool exact, const lp::Solver& solver = lp::default_solver(),
                           std::size_t class_cap = kDefaultClassCap);

}  // namespace irvmargin
