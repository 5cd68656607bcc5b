#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "irvmargin/rational.hpp"

namespace irvmargin::lp {

enum class Relation { less_equal, greater_equal, equal };

struct Term {
  std::size_t var;
  Rational coef;
};

struct Variable {
  std::string name;
  Rational lower;                 // must be finite
  std::optional<Rational> upper;  // nullopt is +infinity
  bool integral = false;
  /// Branching picks fractional variables of higher priority first.
  int branch_priority = 0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

/// Linear minimisation problem with bounded variables.
class Model {
 public:
  std::size_t add_variable(std::string name, Rational lower = 0,
                           std::optional<Rational> upper = std::nullopt, bool integral = false);
  std::size_t add_constraint(std::string name, std::vector<Term> terms, Relation relation,
                             Rational rhs);
  void set_branch_priority(std::size_t var, int priority);
  void set_objective(std::size_t var, Rational coef);
  void set_bounds(std::size_t var, Rational lower, std::optional<Rational> upper);

  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Rational>& objective() const { return objective_; }
  const Variable& variable(std::size_t i) const { return variables_.at(i); }

  Rational evaluate_objective(const std::vector<Rational>& values) const;
  /// True when `values` satisfies every bound and constraint exactly.
  bool feasible(const std::vector<Rational>& values) const;
  /// True when `values` is feasible and integral on every integral variable.
  bool feasible_integral(const std::vector<Rational>& values) const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<Rational> objective_;
};

enum class Status { optimal, infeasible, unbounded };

std::string_view to_string(Status status);

struct Outcome {
  Status status = Status::infeasible;
  Rational objective;
  std::vector<Rational> values;
  std::size_t relaxations = 0;  ///< continuous LPs solved to produce this outcome
  std::size_t pivots = 0;
};

/// Solver boundary. The bundled exact simplex is the reference; another
/// backend can be supplied wherever a Solver is accepted.
class Solver {
 public:
  virtual ~Solver() = default;
  /// Optimum of the continuous relaxation.
  virtual Outcome solve_lp(const Model& model) const = 0;
  /// Optimum over assignments integral on every integral variable.
  virtual Outcome solve_integral(const Model& model) const;
};

/// Bounded-variable primal simplex in exact arithmetic, two phases. Entering
/// columns follow Dantzig's rule, falling back to Bland's rule during
/// degenerate stalls; ratio-test ties go to the lowest index. Integral solves
/// branch and bound with children re-optimised by dual simplex from the
/// parent basis.
class ExactSimplex final : public Solver {
 public:
  Outcome solve_lp(const Model& model) const override;
  Outcome solve_integral(const Model& model) const override;
};

const Solver& default_solver();

inline Outcome solve_lp(const Model& model) { return default_solver().solve_lp(model); }
inline Outcome solve_integral(const Model& model) { return default_solver().solve_integral(model); }

/// CPLEX LP text format.
std::string to_lp_format(const Model& model, const std::string& title = {});

}  // namespace irvmargin::lp
