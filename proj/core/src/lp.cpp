#include "irvmargin/lp.hpp"

#include <algorithm>
#include <memory>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace irvmargin::lp {

std::size_t Model::add_variable(std::string name, Rational lower, std::optional<Rational> upper,
                                bool integral) {
  if (upper && *upper < lower) throw std::invalid_argument("variable upper bound below lower");
  variables_.push_back({std::move(name), std::move(lower), std::move(upper), integral, 0});
  objective_.emplace_back();
  return variables_.size() - 1;
}

void Model::set_branch_priority(std::size_t var, int priority) {
  variables_.at(var).branch_priority = priority;
}

std::size_t Model::add_constraint(std::string name, std::vector<Term> terms, Relation relation,
                                  Rational rhs) {
  for (const auto& t : terms) {
    if (t.var >= variables_.size()) throw std::out_of_range("constraint term on unknown variable");
  }
  constraints_.push_back({std::move(name), std::move(terms), relation, std::move(rhs)});
  return constraints_.size() - 1;
}

void Model::set_objective(std::size_t var, Rational coef) { objective_.at(var) = std::move(coef); }

void Model::set_bounds(std::size_t var, Rational lower, std::optional<Rational> upper) {
  auto& v = variables_.at(var);
  v.lower = std::move(lower);
  v.upper = std::move(upper);
}

Rational Model::evaluate_objective(const std::vector<Rational>& values) const {
  Rational z;
  for (std::size_t j = 0; j < objective_.size(); ++j) {
    if (!objective_[j].is_zero()) z += objective_[j] * values.at(j);
  }
  return z;
}

bool Model::feasible(const std::vector<Rational>& values) const {
  if (values.size() != variables_.size()) return false;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    if (values[j] < variables_[j].lower) return false;
    if (variables_[j].upper && values[j] > *variables_[j].upper) return false;
  }
  for (const auto& c : constraints_) {
    Rational lhs;
    for (const auto& t : c.terms) lhs += t.coef * values[t.var];
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

bool Model::feasible_integral(const std::vector<Rational>& values) const {
  if (!feasible(values)) return false;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    if (variables_[j].integral && !values[j].is_integer()) return false;
  }
  return true;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::optimal:
      return "optimal";
    case Status::infeasible:
      return "infeasible";
    case Status::unbounded:
      return "unbounded";
  }
  return "infeasible";
}

namespace {

// Tableau over shifted variables x' = x - lower, so every column has bounds
// [0, upper - lower]. Columns: structural, then slack/surplus, then
// artificial. Rows hold B^-1 A; basic values are tracked separately so
// nonbasic columns can rest at either bound.
class Tableau {
 public:
  explicit Tableau(const Model& model) : objective_(model.objective()) {
    const std::size_t n = model.num_variables();
    const std::size_t m = model.num_constraints();
    num_structural_ = n;
    for (const auto& v : model.variables()) lower_.push_back(v.lower);

    upper_.reserve(n + 2 * m);
    for (const auto& v : model.variables()) {
      upper_.push_back(v.upper ? std::optional<Rational>(*v.upper - v.lower) : std::nullopt);
    }

    // Right-hand sides after the shift.
    std::vector<Rational> rhs(m);
    std::vector<int> slack_sign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = model.constraints()[i];
      rhs[i] = c.rhs;
      for (const auto& t : c.terms) {
        const auto& lo = model.variables()[t.var].lower;
        if (!lo.is_zero()) rhs[i] -= t.coef * lo;
      }
      if (c.relation == Relation::less_equal) slack_sign[i] = 1;
      if (c.relation == Relation::greater_equal) slack_sign[i] = -1;
    }

    std::vector<bool> negate(m);
    std::vector<std::size_t> slack_col(m, npos);
    std::vector<bool> needs_artificial(m);
    std::size_t col = n;
    for (std::size_t i = 0; i < m; ++i) {
      negate[i] = rhs[i].sign() < 0;
      if (slack_sign[i] != 0) {
        slack_col[i] = col++;
        upper_.emplace_back(std::nullopt);
      }
      // A slack with coefficient +1 after sign normalisation starts basic.
      needs_artificial[i] = slack_sign[i] == 0 || (negate[i] ? -slack_sign[i] : slack_sign[i]) < 0;
    }
    first_artificial_ = col;
    for (std::size_t i = 0; i < m; ++i) {
      if (needs_artificial[i]) upper_.emplace_back(std::nullopt);
    }
    num_cols_ = first_artificial_ + static_cast<std::size_t>(
                                        std::count(needs_artificial.begin(), needs_artificial.end(), true));

    dense_.assign(m, std::vector<Rational>(num_cols_));
    basis_.assign(m, npos);
    beta_.assign(m, Rational());
    std::size_t artificial = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = model.constraints()[i];
      auto& row = dense_[i];
      for (const auto& t : c.terms) row[t.var] += negate[i] ? -t.coef : t.coef;
      if (slack_col[i] != npos) row[slack_col[i]] = negate[i] ? -slack_sign[i] : slack_sign[i];
      beta_[i] = negate[i] ? -rhs[i] : rhs[i];
      if (needs_artificial[i]) {
        row[artificial] = 1;
        basis_[i] = artificial++;
      } else {
        basis_[i] = slack_col[i];
      }
    }
    at_upper_.assign(num_cols_, false);
    is_basic_.assign(num_cols_, false);
    for (auto b : basis_) is_basic_[b] = true;
  }

  // Returns false when the problem is infeasible.
  bool phase_one() {
    if (first_artificial_ == num_cols_) return true;
    std::vector<Rational> cost(num_cols_);
    for (std::size_t j = first_artificial_; j < num_cols_; ++j) cost[j] = 1;
    auto st = optimise(cost, true);
    if (st != Status::optimal) return false;  // cannot be unbounded: objective >= 0
    for (std::size_t i = 0; i < beta_.size(); ++i) {
      if (basis_[i] >= first_artificial_ && beta_[i].sign() != 0) return false;
    }
    // Pivot zero-valued artificials out of the basis where possible.
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (basis_[r] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (!is_basic_[j] && !dense_[r][j].is_zero()) {
          Rational value = at_upper_[j] ? *upper_[j] : Rational();
          pivot(r, j);
          beta_[r] = value;
          at_upper_[j] = false;
          break;
        }
      }
    }
    return true;
  }

  Status phase_two() {
    std::vector<Rational> cost(num_cols_);
    for (std::size_t j = 0; j < num_structural_; ++j) cost[j] = objective_[j];
    return optimise(cost, false);
  }

  // Rebounds structural variable j, keeping the basis. A nonbasic variable
  // stays at the same side when that side still exists.
  void set_bounds(std::size_t j, const Rational& lower, const std::optional<Rational>& upper) {
    if (is_basic_[j]) {
      const auto r = static_cast<std::size_t>(std::find(basis_.begin(), basis_.end(), j) -
                                              basis_.begin());
      beta_[r] += lower_[j] - lower;
    } else {
      Rational before = lower_[j];
      if (at_upper_[j]) before += *upper_[j];
      at_upper_[j] = at_upper_[j] && upper.has_value();
      Rational delta = (at_upper_[j] ? *upper : lower) - before;
      if (!delta.is_zero()) {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
          if (!dense_[i][j].is_zero()) beta_[i] -= dense_[i][j] * delta;
        }
      }
    }
    lower_[j] = lower;
    upper_[j] = upper ? std::optional<Rational>(*upper - lower) : std::nullopt;
  }

  // Dual simplex from a dual-feasible basis, after bounds were tightened.
  // Leaving rows and entering ties both go to the lowest index, which rules
  // out cycling. Returns nullopt when the basis is not dual feasible.
  std::optional<Status> dual_simplex() {
    const std::size_t m = basis_.size();
    std::vector<Rational> d(num_cols_);
    for (std::size_t j = 0; j < num_structural_; ++j) d[j] = objective_[j];
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] >= num_structural_) continue;
      const auto& cb = objective_[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!dense_[i][j].is_zero()) d[j] -= cb * dense_[i][j];
      }
    }
    for (std::size_t j = 0; j < first_artificial_; ++j) {
      if (is_basic_[j] || fixed(j)) continue;
      if (at_upper_[j] ? d[j].sign() > 0 : d[j].sign() < 0) return std::nullopt;
    }

    while (true) {
      std::size_t r = npos;
      bool to_upper = false;
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t b = basis_[i];
        bool below = beta_[i].sign() < 0;
        bool above = upper_[b] && beta_[i] > *upper_[b];
        if ((below || above) && (r == npos || b < basis_[r])) {
          r = i;
          to_upper = above;
        }
      }
      if (r == npos) return Status::optimal;

      // The leaving variable moves toward its violated bound; pick the
      // entering column that keeps every reduced cost on the right side.
      const Rational target = to_upper ? *upper_[basis_[r]] : Rational();
      const int need = to_upper ? -1 : 1;  // required sign of the change in x_r
      std::size_t enter = npos;
      Rational best;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (is_basic_[j] || fixed(j)) continue;
        const auto& a = dense_[r][j];
        if (a.is_zero()) continue;
        // x_r changes by -a * dx_j; dx_j > 0 from lower, < 0 from upper.
        const int move = at_upper_[j] ? -1 : 1;
        if (-a.sign() * move != need) continue;
        Rational ratio = d[j] / a;
        if (ratio.sign() < 0) ratio = -ratio;
        if (enter == npos || ratio < best) {
          enter = j;
          best = ratio;
        }
      }
      if (enter == npos) return Status::infeasible;

      const Rational& a = dense_[r][enter];
      const Rational step = (beta_[r] - target) / a;  // change in x_enter
      for (std::size_t i = 0; i < m; ++i) {
        if (i != r && !dense_[i][enter].is_zero()) beta_[i] -= dense_[i][enter] * step;
      }
      Rational entering_value = step;
      if (at_upper_[enter]) entering_value += *upper_[enter];
      const std::size_t old = basis_[r];
      pivot(r, enter);
      beta_[r] = entering_value;
      at_upper_[enter] = false;
      at_upper_[old] = to_upper;
      if (!d[enter].is_zero()) {
        Rational factor = d[enter];
        for (std::size_t j = 0; j < num_cols_; ++j) {
          if (!dense_[r][j].is_zero()) d[j] -= factor * dense_[r][j];
        }
      }
    }
  }

  std::vector<Rational> values() const {
    std::vector<Rational> x(num_structural_);
    for (std::size_t j = 0; j < num_structural_; ++j) {
      if (at_upper_[j]) x[j] = *upper_[j];
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < num_structural_) x[basis_[i]] = beta_[i];
    }
    for (std::size_t j = 0; j < num_structural_; ++j) x[j] += lower_[j];
    return x;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  static constexpr std::size_t kStallPivots = 8;

  static Rational magnitude(const Rational& r) { return r.sign() < 0 ? -r : r; }

  Status optimise(const std::vector<Rational>& cost, bool allow_artificial) {
    const std::size_t m = basis_.size();
    const std::size_t limit = allow_artificial ? num_cols_ : first_artificial_;

    // Reduced costs d_j = c_j - c_B^T (B^-1 A)_j.
    std::vector<Rational> d(cost);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!dense_[i][j].is_zero()) d[j] -= cb * dense_[i][j];
      }
    }

    // Dantzig's rule, switching to Bland's rule during runs of degenerate
    // pivots. Every pivot outside such a run strictly improves the
    // objective, so no cycle can form.
    std::size_t degenerate_run = 0;
    while (true) {
      const bool bland = degenerate_run >= kStallPivots;
      std::size_t enter = npos;
      for (std::size_t j = 0; j < limit; ++j) {
        if (is_basic_[j]) continue;
        int s = d[j].sign();
        if ((!at_upper_[j] && s < 0) || (at_upper_[j] && s > 0)) {
          if (bland) {
            enter = j;
            break;
          }
          if (enter == npos || magnitude(d[j]) > magnitude(d[enter])) enter = j;
        }
      }
      if (enter == npos) return Status::optimal;

      // dir = +1 raises the entering variable from 0, -1 lowers it from upper.
      const int dir = at_upper_[enter] ? -1 : 1;
      std::optional<Rational> best;
      std::size_t leave_row = npos;
      std::size_t leave_var = npos;
      bool leave_to_upper = false;

      auto consider = [&](const Rational& ratio, std::size_t row, std::size_t var, bool to_upper) {
        if (!best || ratio < *best || (ratio == *best && var < leave_var)) {
          best = ratio;
          leave_row = row;
          leave_var = var;
          leave_to_upper = to_upper;
        }
      };

      if (upper_[enter]) consider(*upper_[enter], npos, enter, false);
      for (std::size_t i = 0; i < m; ++i) {
        const auto& a = dense_[i][enter];
        if (a.is_zero()) continue;
        int rate = a.sign() * dir;  // basic value moves by -rate * t
        const std::size_t b = basis_[i];
        if (rate > 0) {
          consider(beta_[i] / (dir > 0 ? a : -a), i, b, false);
        } else if (upper_[b]) {
          consider((*upper_[b] - beta_[i]) / (dir > 0 ? -a : a), i, b, true);
        }
      }
      if (!best) return Status::unbounded;

      const Rational t = *best;
      degenerate_run = t.is_zero() ? degenerate_run + 1 : 0;
      if (!t.is_zero()) {
        for (std::size_t i = 0; i < m; ++i) {
          const auto& a = dense_[i][enter];
          if (a.is_zero()) continue;
          if (dir > 0) {
            beta_[i] -= a * t;
          } else {
            beta_[i] += a * t;
          }
        }
      }

      if (leave_row == npos) {
        at_upper_[enter] = !at_upper_[enter];
        ++pivots_;
        continue;
      }

      Rational entering_value = dir > 0 ? t : *upper_[enter] - t;
      const std::size_t r = leave_row;
      const std::size_t old = basis_[r];
      pivot(r, enter);
      beta_[r] = entering_value;
      at_upper_[enter] = false;
      at_upper_[old] = leave_to_upper;

      // Update reduced costs with the new pivot row.
      if (!d[enter].is_zero()) {
        Rational factor = d[enter];
        for (std::size_t j = 0; j < num_cols_; ++j) {
          if (!dense_[r][j].is_zero()) d[j] -= factor * dense_[r][j];
        }
      }
    }
  }

  void pivot(std::size_t r, std::size_t enter) {
    auto& prow = dense_[r];
    const Rational inv = Rational(1) / prow[enter];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < num_cols_; ++j) {
      if (prow[j].is_zero()) continue;
      if (j == enter) {
        prow[j] = 1;
      } else if (inv != Rational(1)) {
        prow[j] *= inv;
      }
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < dense_.size(); ++i) {
      if (i == r) continue;
      auto& row = dense_[i];
      if (row[enter].is_zero()) continue;
      const Rational factor = row[enter];
      for (auto j : nz) row[j] -= factor * prow[j];
    }
    is_basic_[basis_[r]] = false;
    basis_[r] = enter;
    is_basic_[enter] = true;
    ++pivots_;
  }

  bool fixed(std::size_t j) const { return upper_[j] && upper_[j]->is_zero(); }

  std::vector<Rational> objective_;
  std::vector<Rational> lower_;
  std::size_t num_structural_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t num_cols_ = 0;
  std::vector<std::vector<Rational>> dense_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> beta_;
  std::vector<bool> at_upper_;
  std::vector<bool> is_basic_;
  std::size_t pivots_ = 0;
};

using BoundList = std::vector<std::pair<Rational, std::optional<Rational>>>;

template <typename State>
struct BranchNode {
  Rational bound;  // rounded up when the objective is integral
  std::size_t depth;
  std::size_t seq;
  BoundList bounds;
  std::vector<Rational> values;
  State state;
};

struct WorseNode {
  template <typename Node>
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

// Objective takes integral values on integral solutions when every nonzero
// coefficient is an integer on an integral variable.
bool integral_objective(const Model& model) {
  for (std::size_t j = 0; j < model.num_variables(); ++j) {
    const auto& c = model.objective()[j];
    if (c.is_zero()) continue;
    if (!c.is_integer() || !model.variable(j).integral) return false;
  }
  return true;
}

// Highest priority first, then most fractional, then lowest index. Returns
// num_variables() when the point is integral.
std::size_t branching_variable(const Model& model, const std::vector<Rational>& values) {
  std::size_t branch = model.num_variables();
  Rational best_distance;
  for (std::size_t j = 0; j < model.num_variables(); ++j) {
    const auto& v = model.variable(j);
    if (!v.integral || values[j].is_integer()) continue;
    Rational frac = values[j] - values[j].floor();
    Rational dist = std::min(frac, Rational(1) - frac);
    const bool better =
        branch == model.num_variables() ||
        v.branch_priority > model.variable(branch).branch_priority ||
        (v.branch_priority == model.variable(branch).branch_priority && dist > best_distance);
    if (better) {
      branch = j;
      best_distance = dist;
    }
  }
  return branch;
}

// Best-bound branch and bound, deeper nodes first among equal bounds.
// `resolve(parent_state, bounds, var)` re-solves after the bounds of `var`
// changed and returns the outcome with the state to hand to children.
template <typename State, typename Resolve>
Outcome branch_and_bound(const Model& model, Outcome root, State root_state, Resolve resolve) {
  std::size_t relaxations = root.relaxations;
  std::size_t pivots = root.pivots;
  if (root.status != Status::optimal) return root;

  const bool round_bound = integral_objective(model);
  auto effective = [&](const Rational& b) { return round_bound ? b.ceil() : b; };

  std::optional<Outcome> incumbent;
  std::priority_queue<BranchNode<State>, std::vector<BranchNode<State>>, WorseNode> open;
  std::size_t seq = 0;

  BoundList root_bounds;
  for (const auto& v : model.variables()) root_bounds.emplace_back(v.lower, v.upper);
  open.push({effective(root.objective), 0, seq++, std::move(root_bounds), std::move(root.values),
             std::move(root_state)});

  while (!open.empty()) {
    BranchNode<State> node = open.top();
    open.pop();
    if (incumbent && node.bound >= incumbent->objective) continue;

    const std::size_t branch = branching_variable(model, node.values);
    if (branch == model.num_variables()) {
      Rational objective = model.evaluate_objective(node.values);
      if (!incumbent || objective < incumbent->objective) {
        Outcome o;
        o.status = Status::optimal;
        o.objective = objective;
        o.values = std::move(node.values);
        incumbent = std::move(o);
      }
      continue;
    }

    const Rational down = node.values[branch].floor();
    const Rational up = node.values[branch].ceil();
    for (int side = 0; side < 2; ++side) {
      auto bounds = node.bounds;
      auto& [lo, hi] = bounds[branch];
      if (side == 0) {
        if (down < lo) continue;
        hi = down;
      } else {
        if (hi && up > *hi) continue;
        lo = up;
      }
      auto [child, state] = resolve(node.state, bounds, branch);
      relaxations += child.relaxations;
      pivots += child.pivots;
      if (child.status != Status::optimal) continue;
      if (incumbent && effective(child.objective) >= incumbent->objective) continue;
      open.push({effective(child.objective), node.depth + 1, seq++, std::move(bounds),
                 std::move(child.values), std::move(state)});
    }
  }

  if (!incumbent) {
    Outcome none;
    none.status = Status::infeasible;
    none.relaxations = relaxations;
    none.pivots = pivots;
    return none;
  }
  incumbent->relaxations = relaxations;
  incumbent->pivots = pivots;
  return *incumbent;
}

Model with_bounds(const Model& model, const BoundList& bounds) {
  Model work = model;
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    work.set_bounds(j, bounds[j].first, bounds[j].second);
  }
  return work;
}

// Cold two-phase solve; the tableau is returned for warm starts.
std::pair<Outcome, std::shared_ptr<const Tableau>> solve_cold(const Model& model) {
  Outcome out;
  out.relaxations = 1;
  auto tableau = std::make_shared<Tableau>(model);
  if (!tableau->phase_one()) {
    out.status = Status::infeasible;
  } else {
    out.status = tableau->phase_two();
  }
  out.pivots = tableau->pivots();
  if (out.status == Status::optimal) {
    out.values = tableau->values();
    out.objective = model.evaluate_objective(out.values);
  }
  return {std::move(out), std::move(tableau)};
}

}  // namespace

Outcome ExactSimplex::solve_lp(const Model& model) const { return solve_cold(model).first; }

Outcome ExactSimplex::solve_integral(const Model& model) const {
  auto [root, tableau] = solve_cold(model);
  auto resolve = [&](const std::shared_ptr<const Tableau>& parent, const BoundList& bounds,
                     std::size_t var) -> std::pair<Outcome, std::shared_ptr<const Tableau>> {
    auto child = std::make_shared<Tableau>(*parent);
    const std::size_t before = child->pivots();
    child->set_bounds(var, bounds[var].first, bounds[var].second);
    auto status = child->dual_simplex();
    if (!status) return solve_cold(with_bounds(model, bounds));
    Outcome out;
    out.relaxations = 1;
    out.status = *status;
    out.pivots = child->pivots() - before;
    if (out.status == Status::optimal) {
      out.values = child->values();
      out.objective = model.evaluate_objective(out.values);
    }
    return {std::move(out), std::move(child)};
  };
  return branch_and_bound(model, std::move(root), std::move(tableau), resolve);
}

Outcome Solver::solve_integral(const Model& model) const {
  auto resolve = [&](std::monostate, const BoundList& bounds, std::size_t) {
    return std::pair<Outcome, std::monostate>{solve_lp(with_bounds(model, bounds)), {}};
  };
  return branch_and_bound(model, solve_lp(model), std::monostate{}, resolve);
}

const Solver& default_solver() {
  static const ExactSimplex solver;
  return solver;
}

namespace {

std::string lp_number(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  std::ostringstream os;
  os.precision(17);
  os << r.to_double();
  return os.str();
}

void write_terms(std::ostream& os, const Model& model, const std::vector<Term>& terms) {
  bool first = true;
  for (const auto& t : terms) {
    if (t.coef.is_zero()) continue;
    const auto& name = model.variable(t.var).name;
    Rational mag = t.coef.sign() < 0 ? -t.coef : t.coef;
    if (first) {
      os << (t.coef.sign() < 0 ? "-" : "");
    } else {
      os << (t.coef.sign() < 0 ? " - " : " + ");
    }
    if (mag != Rational(1)) os << lp_number(mag) << ' ';
    os << name;
    first = false;
  }
  if (first) os << "0 " << (model.num_variables() ? model.variable(0).name : "x");
}

}  // namespace

std::string to_lp_format(const Model& model, const std::string& title) {
  std::ostringstream os;
  if (!title.empty()) os << "\\ " << title << '\n';
  os << "Minimize\n obj: ";
  std::vector<Term> obj;
  for (std::size_t j = 0; j < model.num_variables(); ++j) {
    if (!model.objective()[j].is_zero()) obj.push_back({j, model.objective()[j]});
  }
  write_terms(os, model, obj);
  os << "\nSubject To\n";
  for (std::size_t i = 0; i < model.num_constraints(); ++i) {
    const auto& c = model.constraints()[i];
    os << ' ' << (c.name.empty() ? "c" + std::to_string(i) : c.name) << ": ";
    write_terms(os, model, c.terms);
    switch (c.relation) {
      case Relation::less_equal:
        os << " <= ";
        break;
      case Relation::greater_equal:
        os << " >= ";
        break;
      case Relation::equal:
        os << " = ";
        break;
    }
    os << lp_number(c.rhs) << '\n';
  }
  os << "Bounds\n";
  for (const auto& v : model.variables()) {
    if (v.upper) {
      if (*v.upper == v.lower) {
        os << ' ' << v.name << " = " << lp_number(v.lower) << '\n';
      } else {
        os << ' ' << lp_number(v.lower) << " <= " << v.name << " <= " << lp_number(*v.upper) << '\n';
      }
    } else {
      os << ' ' << v.name << " >= " << lp_number(v.lower) << '\n';
    }
  }
  bool any_int = false;
  for (const auto& v : model.variables()) any_int = any_int || v.integral;
  if (any_int) {
    os << "General\n";
    for (const auto& v : model.variables()) {
      if (v.integral) os << ' ' << v.name << '\n';
    }
  }
  os << "End\n";
  return os.str();
}

}  // namespace irvmargin::lp
