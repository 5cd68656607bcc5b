#include "irvmargin/distance.hpp"

#include <string>

namespace irvmargin {

DistanceModel build_distance_lp(const EliminationOrder& order, const Election& election, Mode mode,
                                std::size_t class_cap) {
  if (order.size() < 2) throw PreconditionError("distance program needs at least two candidates");
  ClassTable classes = class_counts(election, order, class_cap);
  const std::size_t k = order.size();
  const std::size_t num_classes = classes.num_classes();
  const Rational total(election.total_ballots());

  DistanceModel dm{mode, std::move(classes), {}, {}, {}, {}, 0, false};
  auto& lp = dm.program;
  dm.q.resize(num_classes);
  dm.m.resize(num_classes);
  dm.y.resize(num_classes);

  const bool use_q = mode != Mode::remove;
  const bool use_m = mode != Mode::add;
  for (std::size_t s = 0; s < num_classes; ++s) {
    const BallotCount n_s = dm.classes.count(static_cast<ClassMask>(s));
    const auto tag = std::to_string(s);
    if (use_q) {
      dm.q[s] = lp.add_variable("q" + tag, 0, std::nullopt, true);
      lp.set_objective(*dm.q[s], 1);
    }
    // Deletion can only touch signatures that occur.
    if (use_m && (mode == Mode::modify || n_s > 0)) {
      dm.m[s] = lp.add_variable("m" + tag, 0, Rational(n_s), true);
      if (mode == Mode::remove) lp.set_objective(*dm.m[s], 1);
    }
    // Additions can push a class past the original total, so only modify
    // and delete keep the upper bound.
    std::optional<Rational> y_upper;
    if (mode == Mode::modify) y_upper = total;
    if (mode == Mode::remove) y_upper = Rational(n_s);
    dm.y[s] = lp.add_variable("y" + tag, 0, y_upper, true);
    // With every y integral the remaining system is totally unimodular, so
    // optimal vertices are integral in q and m as well.
    lp.set_branch_priority(*dm.y[s], 1);
  }

  // Mass balance: y - q + m = n.
  for (std::size_t s = 0; s < num_classes; ++s) {
    std::vector<lp::Term> terms{{*dm.y[s], 1}};
    if (dm.q[s]) terms.push_back({*dm.q[s], -1});
    if (dm.m[s]) terms.push_back({*dm.m[s], 1});
    lp.add_constraint("bal" + std::to_string(s), std::move(terms), lp::Relation::equal,
                      Rational(dm.classes.count(static_cast<ClassMask>(s))));
  }

  if (mode == Mode::modify) {
    std::vector<lp::Term> terms;
    for (std::size_t s = 0; s < num_classes; ++s) {
      terms.push_back({*dm.q[s], 1});
      terms.push_back({*dm.m[s], -1});
    }
    lp.add_constraint("same_total", std::move(terms), lp::Relation::equal, 0);
    dm.has_balance_constraint = true;
  }

  // Elimination constraints: at round i, order[i] holds no more than order[j].
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<lp::Term> terms;
      for (std::size_t s = 0; s < num_classes; ++s) {
        auto p = counting_position(static_cast<ClassMask>(s), i);
        if (!p) continue;
        if (*p == i) terms.push_back({*dm.y[s], 1});
        if (*p == j) terms.push_back({*dm.y[s], -1});
      }
      lp.add_constraint("elim" + std::to_string(i) + "_" + std::to_string(j), std::move(terms),
                        lp::Relation::less_equal, 0);
      ++dm.num_elimination_constraints;
    }
  }
  return dm;
}

DistanceResult solve_distance(const DistanceModel& model, bool exact, const lp::Solver& solver) {
  DistanceResult result;
  lp::Outcome relaxed = solver.solve_lp(model.program);
  if (relaxed.status != lp::Status::optimal) {
    throw Error("distance program is " + std::string(lp::to_string(relaxed.status)) +
                "; the model construction is wrong");
  }
  result.lp_optimum = relaxed.objective;
  result.relaxations = relaxed.relaxations;
  result.integral = true;
  for (std::size_t j = 0; j < model.program.num_variables(); ++j) {
    if (model.program.variable(j).integral && !relaxed.values[j].is_integer()) {
      result.integral = false;
      break;
    }
  }

  const lp::Outcome* chosen = &relaxed;
  lp::Outcome integral;
  if (exact && !result.integral) {
    integral = solver.solve_integral(model.program);
    result.relaxations += integral.relaxations;
    if (integral.status != lp::Status::optimal) {
      throw Error("integral distance program is " + std::string(lp::to_string(integral.status)));
    }
    chosen = &integral;
  }

  auto value = exact ? chosen->objective : chosen->objective.ceil();
  result.value = *value.ceil().to_int64();
  result.profile.reserve(model.y.size());
  for (const auto& y : model.y) result.profile.push_back(chosen->values[*y]);
  return result;
}

DistanceResult distance_to(const EliminationOrder& order, const Election& election, Mode mode,
                           bool exact, const lp::Solver& solver, std::size_t class_cap) {
  return solve_distance(build_distance_lp(order, election, mode, class_cap), exact, solver);
}

}  // namespace irvmargin
