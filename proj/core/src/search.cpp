#include "irvmargin/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace irvmargin {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::margin:
      return "margin";
    case Algorithm::mrsw:
      return "mrsw";
    case Algorithm::exhaustive:
      return "exhaustive";
  }
  return "margin";
}

Algorithm algorithm_from_string(std::string_view text) {
  if (text == "margin") return Algorithm::margin;
  if (text == "mrsw") return Algorithm::mrsw;
  if (text == "exhaustive") return Algorithm::exhaustive;
  throw PreconditionError("unknown algorithm '" + std::string(text) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

struct Node {
  BallotCount score = 0;
  std::string key;  // candidate names joined; frontier tie-break
  EliminationOrder order;
  std::optional<BallotCount> leaf_distance;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.score != b.score) return a.score < b.score;
    return a.key < b.key;
  }
};

struct Expansion {
  std::vector<Node> children;
  std::optional<BallotCount> leaf_value;
};

class Context {
 public:
  Context(const Election& election, const SearchOptions& options, Algorithm algorithm)
      : election_(election),
        options_(options),
        solver_(options.solver ? *options.solver : lp::default_solver()),
        bounds_(election),
        start_(Clock::now()) {
    if (election.num_candidates() < 2) {
      throw PreconditionError("margin computation needs at least two candidates");
    }
    if (options.cap && *options.cap < 0) throw PreconditionError("cap must be non-negative");
    if (options.threads == 0) throw PreconditionError("threads must be positive");

    tabulation_ = run_irv(election, options.tie_policy);
    report_.mode = options.mode;
    report_.algorithm = algorithm;
    report_.bound = options.bound;
    report_.lrm = last_round_margin(tabulation_);
    report_.lrm_add = last_round_margin_add(tabulation_);
    report_.winner = tabulation_.winner;
    report_.elimination_order = tabulation_.full_order();
    report_.cap = options.cap;
    report_.tie_caveat = tabulation_.had_ties();
    report_.num_candidates = election.num_candidates();
    report_.num_ballots = election.total_ballots();
  }

  const Election& election() const { return election_; }
  const SearchOptions& options() const { return options_; }
  CandidateId winner() const { return tabulation_.winner; }
  bool pruning() const { return options_.pruning; }
  bool is_leaf(const EliminationOrder& order) const {
    return order.size() == election_.num_candidates();
  }

  BallotCount initial_upper() const {
    BallotCount u = options_.mode == Mode::modify ? report_.lrm : report_.lrm_add;
    if (options_.cap) u = std::min(u, *options_.cap + 1);
    return u;
  }

  BallotCount bound(const EliminationOrder& order) const {
    return bounds_.evaluate({options_.bound, bound_mode_for(options_.mode)},
                            CandidateSet::of(order));
  }

  BallotCount distance(const EliminationOrder& order) {
    auto model = build_distance_lp(order, election_, options_.mode, options_.class_cap);
    if (options_.on_model) options_.on_model(order, model);
    auto result = solve_distance(model, is_leaf(order), solver_);
    lps_solved_.fetch_add(1, std::memory_order_relaxed);
    lp_relaxations_.fetch_add(result.relaxations, std::memory_order_relaxed);
    return result.value;
  }

  void count_scored() { nodes_scored_.fetch_add(1, std::memory_order_relaxed); }
  void count_expanded() { nodes_expanded_.fetch_add(1, std::memory_order_relaxed); }

  void trace(TraceEvent event) {
    if (!options_.trace) return;
    std::lock_guard lock(trace_mutex_);
    options_.trace->push_back(std::move(event));
  }

  std::string key(const EliminationOrder& order) const {
    std::string k;
    for (CandidateId c : order) {
      k += election_.name(c);
      k += '\x1f';
    }
    return k;
  }

  Node make_node(BallotCount score, EliminationOrder order,
                 std::optional<BallotCount> leaf_distance = std::nullopt) const {
    auto k = key(order);
    return Node{score, std::move(k), std::move(order), leaf_distance};
  }

  MarginReport finish(BallotCount margin, std::optional<EliminationOrder> witness) {
    report_.margin = margin;
    report_.witness_order = std::move(witness);
    report_.capped = options_.cap && margin == *options_.cap + 1;
    report_.stats.nodes_scored = nodes_scored_.load();
    report_.stats.nodes_expanded = nodes_expanded_.load();
    report_.stats.lps_solved = lps_solved_.load();
    report_.stats.lp_relaxations = lp_relaxations_.load();
    report_.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return report_;
  }

 private:
  const Election& election_;
  const SearchOptions& options_;
  const lp::Solver& solver_;
  BoundEvaluator bounds_;
  TabulationResult tabulation_;
  MarginReport report_;
  Clock::time_point start_;
  std::atomic<std::size_t> nodes_scored_{0};
  std::atomic<std::size_t> nodes_expanded_{0};
  std::atomic<std::size_t> lps_solved_{0};
  std::atomic<std::size_t> lp_relaxations_{0};
  std::mutex trace_mutex_;
};

EliminationOrder prepend(CandidateId c, const EliminationOrder& order) {
  EliminationOrder child;
  child.reserve(order.size() + 1);
  child.push_back(c);
  child.insert(child.end(), order.begin(), order.end());
  return child;
}

std::vector<CandidateId> missing(const Election& e, const EliminationOrder& order) {
  return (e.candidates() - CandidateSet::of(order)).members();
}

// Shared best-first driver. Nodes are taken in (score, name key) order; a
// node is expanded only while its score is below the current upper bound.
// With several threads the bound only decreases and the final value does
// not depend on scheduling.
template <typename Expand>
MarginReport run_frontier(Context& ctx, std::set<Node, NodeOrder> frontier, Expand expand) {
  std::mutex mutex;
  std::condition_variable wake;
  BallotCount upper = ctx.initial_upper();
  std::optional<EliminationOrder> witness;
  std::size_t active = 0;

  auto worker = [&] {
    std::unique_lock lock(mutex);
    while (true) {
      wake.wait(lock, [&] { return !frontier.empty() || active == 0; });
      if (frontier.empty()) {
        wake.notify_all();
        return;
      }
      Node node = std::move(frontier.extract(frontier.begin()).value());
      if (ctx.pruning() && node.score >= upper) continue;
      ++active;
      const BallotCount snapshot = upper;
      lock.unlock();

      ctx.count_expanded();
      ctx.trace({TraceEvent::Kind::expanded, node.order, node.score, node.leaf_distance, false});
      Expansion result = expand(node, snapshot);

      lock.lock();
      if (result.leaf_value && *result.leaf_value < upper) {
        upper = *result.leaf_value;
        witness = node.order;
      }
      for (auto& child : result.children) frontier.insert(std::move(child));
      --active;
      wake.notify_all();
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, ctx.options().threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return ctx.finish(upper, std::move(witness));
}

}  // namespace

MarginReport compute_margin(const Election& election, const SearchOptions& options) {
  Context ctx(election, options, Algorithm::margin);
  const BallotCount initial = ctx.initial_upper();

  std::set<Node, NodeOrder> frontier;
  for (CandidateId c = 0; c < election.num_candidates(); ++c) {
    if (c == ctx.winner()) continue;
    EliminationOrder order{c};
    BallotCount score = ctx.bound(order);
    ctx.count_scored();
    bool keep = !ctx.pruning() || score < initial;
    ctx.trace({TraceEvent::Kind::scored, order, score, std::nullopt, keep});
    if (keep) frontier.insert(ctx.make_node(score, std::move(order)));
  }

  auto expand = [&](const Node& node, BallotCount upper) {
    Expansion out;
    if (ctx.is_leaf(node.order)) {
      out.leaf_value = node.leaf_distance;
      return out;
    }
    for (CandidateId c : missing(election, node.order)) {
      EliminationOrder child = prepend(c, node.order);
      BallotCount score = std::max(node.score, ctx.bound(child));
      ctx.count_scored();
      std::optional<BallotCount> dist;
      if (!ctx.pruning() || score < upper) {
        dist = ctx.distance(child);
        score = std::max(score, *dist);
      }
      bool keep = !ctx.pruning() || score < upper;
      ctx.trace({TraceEvent::Kind::scored, child, score, dist, keep});
      if (keep) {
        bool leaf = ctx.is_leaf(child);
        out.children.push_back(ctx.make_node(score, std::move(child), leaf ? dist : std::nullopt));
      }
    }
    return out;
  };
  return run_frontier(ctx, std::move(frontier), expand);
}

MarginReport mrsw_baseline(const Election& election, const SearchOptions& options) {
  SearchOptions sequential = options;
  sequential.threads = 1;
  Context ctx(election, sequential, Algorithm::mrsw);

  std::set<Node, NodeOrder> frontier;
  for (CandidateId c = 0; c < election.num_candidates(); ++c) {
    if (c == ctx.winner()) continue;
    EliminationOrder order{c};
    ctx.count_scored();
    ctx.trace({TraceEvent::Kind::scored, order, 0, std::nullopt, true});
    frontier.insert(ctx.make_node(0, std::move(order)));
  }

  auto expand = [&](const Node& node, BallotCount upper) {
    Expansion out;
    if (ctx.is_leaf(node.order)) {
      out.leaf_value = node.score;
      return out;
    }
    for (CandidateId c : missing(election, node.order)) {
      EliminationOrder child = prepend(c, node.order);
      BallotCount score = ctx.distance(child);
      ctx.count_scored();
      bool keep = !ctx.pruning() || score < upper;
      ctx.trace({TraceEvent::Kind::scored, child, score, score, keep});
      if (keep) out.children.push_back(ctx.make_node(score, std::move(child), score));
    }
    return out;
  };
  return run_frontier(ctx, std::move(frontier), expand);
}

std::vector<LeafDistance> all_leaf_distances(const Election& election, Mode mode,
                                             const lp::Solver& solver) {
  if (election.num_candidates() < 2) {
    throw PreconditionError("leaf distances need at least two candidates");
  }
  EliminationOrder order(election.num_candidates());
  std::iota(order.begin(), order.end(), CandidateId{0});
  std::vector<LeafDistance> out;
  do {
    out.push_back({order, distance_to(order, election, mode, true, solver).value});
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

MarginReport exhaustive_margin(const Election& election, const SearchOptions& options) {
  if (election.num_candidates() > kExhaustiveCandidateLimit) {
    throw GuardError("exhaustive search is limited to " +
                     std::to_string(kExhaustiveCandidateLimit) + " candidates");
  }
  Context ctx(election, options, Algorithm::exhaustive);

  BallotCount best = std::numeric_limits<BallotCount>::max();
  std::optional<EliminationOrder> witness;
  EliminationOrder order(election.num_candidates());
  std::iota(order.begin(), order.end(), CandidateId{0});
  do {
    if (order.back() == ctx.winner()) continue;
    ctx.count_scored();
    BallotCount d = ctx.distance(order);
    ctx.trace({TraceEvent::Kind::scored, order, d, d, false});
    if (d < best) {
      best = d;
      witness = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  if (options.cap && best > *options.cap) {
    best = *options.cap + 1;
    witness.reset();
  }
  return ctx.finish(best, std::move(witness));
}

MarginReport run_algorithm(Algorithm algorithm, const Election& election,
                           const SearchOptions& options) {
  switch (algorithm) {
    case Algorithm::margin:
      return compute_margin(election, options);
    case Algorithm::mrsw:
      return mrsw_baseline(election, options);
    case Algorithm::exhaustive:
      return exhaustive_margin(election, options);
  }
  return compute_margin(election, options);
}

}  // namespace irvmargin
