#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "irvmargin/oracle.hpp"
#include "irvmargin/search.hpp"

namespace irvmargin {
namespace {

using testing::id;
using testing::order;
using testing::table1;

std::map<EliminationOrder, TraceEvent> scored(const std::vector<TraceEvent>& trace) {
  std::map<EliminationOrder, TraceEvent> out;
  for (const auto& ev : trace) {
    if (ev.kind == TraceEvent::Kind::scored) out[ev.order] = ev;
  }
  return out;
}

TEST(ComputeMargin, Table1) {
  auto e = table1();
  std::vector<TraceEvent> trace;
  SearchOptions opts;
  opts.trace = &trace;
  auto r = compute_margin(e, opts);
  EXPECT_EQ(r.margin, 3);
  EXPECT_EQ(r.lrm, 17);
  EXPECT_EQ(r.lrm_add, 34);
  EXPECT_EQ(r.winner, id(e, "A"));
  EXPECT_EQ(r.elimination_order, order(e, {"D", "C", "B", "A"}));
  EXPECT_EQ(r.witness_order, order(e, {"D", "B", "A", "C"}));
  EXPECT_FALSE(r.capped);
  EXPECT_FALSE(r.tie_caveat);
  EXPECT_EQ(r.num_candidates, 4u);
  EXPECT_EQ(r.num_ballots, 86);
  EXPECT_EQ(r.stats.nodes_scored, 9u);
  EXPECT_EQ(r.stats.lps_solved, 5u);
  EXPECT_GE(r.stats.lp_relaxations, r.stats.lps_solved);

  auto s = scored(trace);
  EXPECT_EQ(s.size(), 9u);
  EXPECT_EQ(s.at(order(e, {"B"})).score, 7);
  EXPECT_EQ(s.at(order(e, {"C"})).score, 0);
  EXPECT_EQ(s.at(order(e, {"D"})).score, 18);
  EXPECT_FALSE(s.at(order(e, {"D"})).enqueued);
  EXPECT_EQ(s.at(order(e, {"A", "C"})).score, 1);
  EXPECT_EQ(s.at(order(e, {"A", "C"})).distance, 0);
  EXPECT_EQ(s.at(order(e, {"B", "C"})).score, 10);
  EXPECT_EQ(s.at(order(e, {"D", "C"})).score, 18);
  // Already past the incumbent on the bound alone, so no program is solved.
  EXPECT_FALSE(s.at(order(e, {"D", "C"})).distance);
  EXPECT_EQ(s.at(order(e, {"B", "A", "C"})).score, 3);
  EXPECT_EQ(s.at(order(e, {"D", "A", "C"})).score, 8);
  EXPECT_EQ(s.at(order(e, {"D", "B", "A", "C"})).score, 3);
}

TEST(ComputeMargin, ChildScoresNeverDropBelowParent) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto e = random_election(seed, 4 + seed % 2, 30, 6);
    std::vector<TraceEvent> trace;
    SearchOptions opts;
    opts.trace = &trace;
    compute_margin(e, opts);
    auto s = scored(trace);
    for (const auto& [pi, ev] : s) {
      if (pi.size() < 2) continue;
      EliminationOrder parent(pi.begin() + 1, pi.end());
      auto it = s.find(parent);
      ASSERT_NE(it, s.end());
      EXPECT_GE(ev.score, it->second.score);
    }
  }
}

TEST(Mrsw, Table1) {
  auto e = table1();
  std::vector<TraceEvent> trace;
  SearchOptions opts;
  opts.trace = &trace;
  auto r = mrsw_baseline(e, opts);
  EXPECT_EQ(r.margin, 3);
  EXPECT_EQ(r.algorithm, Algorithm::mrsw);
  EXPECT_EQ(r.stats.lps_solved, 20u);
  EXPECT_EQ(r.stats.nodes_scored, 23u);
  auto s = scored(trace);
  EXPECT_EQ(s.at(order(e, {"B"})).score, 0);
  EXPECT_FALSE(s.at(order(e, {"B"})).distance);
  EXPECT_EQ(s.at(order(e, {"B", "D"})).score, 28);
  EXPECT_EQ(s.at(order(e, {"A", "D"})).score, 38);
  EXPECT_EQ(s.at(order(e, {"B", "D", "A", "C"})).score, 8);
}

TEST(Exhaustive, Table1AllModes) {
  auto e = table1();
  EXPECT_EQ(exhaustive_margin(e).margin, 3);
  for (auto mode : {Mode::add, Mode::remove}) {
    SearchOptions opts;
    opts.mode = mode;
    EXPECT_EQ(exhaustive_margin(e, opts).margin, 6) << to_string(mode);
    EXPECT_EQ(compute_margin(e, opts).margin, 6) << to_string(mode);
    EXPECT_EQ(mrsw_baseline(e, opts).margin, 6) << to_string(mode);
  }
}

TEST(Exhaustive, GuardAboveSixCandidates) {
  auto e = random_election(3, 7, 20, 5);
  EXPECT_THROW(exhaustive_margin(e), GuardError);
}

TEST(ComputeMargin, CapAddMode) {
  auto e = table1();
  SearchOptions opts;
  opts.mode = Mode::add;
  opts.cap = 2;
  auto r = compute_margin(e, opts);
  EXPECT_EQ(r.margin, 3);
  EXPECT_TRUE(r.capped);
  EXPECT_FALSE(r.witness_order);
  EXPECT_EQ(r.cap, 2);

  opts.cap = 6;
  r = compute_margin(e, opts);
  EXPECT_EQ(r.margin, 6);
  EXPECT_FALSE(r.capped);
}

TEST(ComputeMargin, CapAboveMarginChangesNothing) {
  auto e = table1();
  SearchOptions opts;
  opts.cap = 50;
  auto r = compute_margin(e, opts);
  EXPECT_EQ(r.margin, 3);
  EXPECT_FALSE(r.capped);
}

TEST(ComputeMargin, TwoCandidates) {
  auto e = load_election(testing::data_path("two_candidates.txt"));
  auto r = compute_margin(e);
  EXPECT_EQ(r.margin, 7);
  EXPECT_EQ(r.margin, r.lrm);
  EXPECT_EQ(r.stats.lps_solved, 0u);
  auto b = mrsw_baseline(e);
  EXPECT_EQ(b.margin, 7);
  EXPECT_EQ(b.stats.lps_solved, 1u);
  EXPECT_EQ(exhaustive_margin(e).margin, 7);
}

TEST(ComputeMargin, TiedElectionCarriesCaveat) {
  auto e = parse_election("candidates: A,B\n3: A\n3: B\n");
  auto r = compute_margin(e);
  EXPECT_TRUE(r.tie_caveat);
  EXPECT_EQ(r.margin, 0);
}

TEST(ComputeMargin, NeedsTwoCandidates) {
  EXPECT_THROW(compute_margin(parse_election("candidates: A\n1: A\n")), PreconditionError);
  EXPECT_THROW(mrsw_baseline(parse_election("candidates: A\n1: A\n")), PreconditionError);
}

TEST(ComputeMargin, AlgorithmsAgree) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto e = random_election(seed, 3 + seed % 3, 10 + static_cast<BallotCount>(seed % 40),
                             2 + seed % 7);
    for (auto mode : {Mode::modify, Mode::add, Mode::remove}) {
      SearchOptions opts;
      opts.mode = mode;
      auto expected = exhaustive_margin(e, opts).margin;
      EXPECT_EQ(compute_margin(e, opts).margin, expected) << seed;
      EXPECT_EQ(mrsw_baseline(e, opts).margin, expected) << seed;
      opts.bound = BoundKind::lb1;
      EXPECT_EQ(compute_margin(e, opts).margin, expected) << seed;
      opts.pruning = false;
      EXPECT_EQ(compute_margin(e, opts).margin, expected) << seed;
    }
  }
}

TEST(ComputeMargin, Lb2SolvesNoMoreProgramsThanLb1OnTable1) {
  auto e = table1();
  SearchOptions opts;
  auto with_lb2 = compute_margin(e, opts);
  opts.bound = BoundKind::lb1;
  auto with_lb1 = compute_margin(e, opts);
  EXPECT_EQ(with_lb1.margin, 3);
  EXPECT_LE(with_lb2.stats.lps_solved, with_lb1.stats.lps_solved);
}

TEST(ComputeMargin, ThreadsDoNotChangeMargin) {
  for (std::uint64_t seed = 40; seed < 50; ++seed) {
    auto e = random_election(seed, 5, 50, 9);
    for (auto mode : {Mode::modify, Mode::add}) {
      SearchOptions opts;
      opts.mode = mode;
      auto single = compute_margin(e, opts);
      opts.threads = 4;
      EXPECT_EQ(compute_margin(e, opts).margin, single.margin) << seed;
      EXPECT_EQ(mrsw_baseline(e, opts).margin, single.margin) << seed;
    }
  }
}

TEST(ComputeMargin, DeterministicStatistics) {
  auto e = random_election(77, 5, 45, 8);
  auto a = compute_margin(e);
  auto b = compute_margin(e);
  EXPECT_EQ(a.margin, b.margin);
  EXPECT_EQ(a.witness_order, b.witness_order);
  EXPECT_EQ(a.stats.nodes_scored, b.stats.nodes_scored);
  EXPECT_EQ(a.stats.lps_solved, b.stats.lps_solved);
}

TEST(ComputeMargin, ModelHookSeesEveryProgram) {
  auto e = table1();
  std::size_t calls = 0;
  SearchOptions opts;
  opts.on_model = [&](const EliminationOrder&, const DistanceModel&) { ++calls; };
  auto r = compute_margin(e, opts);
  EXPECT_EQ(calls, r.stats.lps_solved);
}

TEST(ComputeMargin, WitnessIsReachable) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto e = random_election(seed, 4, 25, 5);
    for (auto mode : {Mode::modify, Mode::add, Mode::remove}) {
      SearchOptions opts;
      opts.mode = mode;
      auto r = compute_margin(e, opts);
      if (!r.witness_order) continue;
      EXPECT_NE(r.witness_order->back(), r.winner);
      EXPECT_EQ(distance_to(*r.witness_order, e, mode, true).value, r.margin);
    }
  }
}

TEST(AllLeafDistances, CountAndOrder) {
  auto e = table1();
  auto leaves = all_leaf_distances(e, Mode::modify);
  ASSERT_EQ(leaves.size(), 24u);
  EXPECT_TRUE(std::is_sorted(leaves.begin(), leaves.end(),
                             [](const auto& a, const auto& b) { return a.order < b.order; }));
  for (const auto& l : leaves) {
    if (l.order == order(e, {"D", "C", "B", "A"})) {
      EXPECT_EQ(l.distance, 0);
    }
  }
}

TEST(Algorithm, StringRoundTrip) {
  for (auto a : {Algorithm::margin, Algorithm::mrsw, Algorithm::exhaustive}) {
    EXPECT_EQ(algorithm_from_string(to_string(a)), a);
  }
  EXPECT_THROW(algorithm_from_string("greedy"), PreconditionError);
}

}  // namespace
}  // namespace irvmargin
