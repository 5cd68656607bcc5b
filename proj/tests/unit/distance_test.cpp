#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "irvmargin/distance.hpp"
#include "irvmargin/oracle.hpp"

namespace irvmargin {
namespace {

using testing::order;
using testing::table1;

TEST(BuildDistanceLp, ModifyStructure) {
  auto e = table1();
  auto dm = build_distance_lp(order(e, {"A", "C"}), e, Mode::modify);
  EXPECT_EQ(dm.classes.num_classes(), 4u);
  EXPECT_EQ(dm.program.num_variables(), 12u);
  EXPECT_TRUE(dm.has_balance_constraint);
  EXPECT_EQ(dm.num_elimination_constraints, 1u);
  EXPECT_EQ(dm.program.num_constraints(), 4u + 1u + 1u);
  for (std::size_t s = 0; s < 4; ++s) {
    EXPECT_TRUE(dm.q[s] && dm.m[s] && dm.y[s]);
    EXPECT_EQ(dm.program.variable(*dm.y[s]).upper, Rational(86));
    EXPECT_EQ(dm.program.variable(*dm.m[s]).upper, Rational(dm.classes.count(s)));
  }
}

TEST(BuildDistanceLp, AddStructure) {
  auto e = table1();
  auto dm = build_distance_lp(order(e, {"A", "C"}), e, Mode::add);
  EXPECT_EQ(dm.program.num_variables(), 8u);
  EXPECT_FALSE(dm.has_balance_constraint);
  for (std::size_t s = 0; s < 4; ++s) {
    EXPECT_FALSE(dm.m[s]);
    EXPECT_FALSE(dm.program.variable(*dm.y[s]).upper);
  }
}

TEST(BuildDistanceLp, DeleteOnlyTouchesOccurringClasses) {
  auto e = table1();
  auto dm = build_distance_lp(order(e, {"A", "C"}), e, Mode::remove);
  // Only [A,C] (mask 3, 40 ballots) and [C] (mask 2, 46 ballots) occur.
  EXPECT_FALSE(dm.m[0]);
  EXPECT_FALSE(dm.m[1]);
  EXPECT_TRUE(dm.m[2]);
  EXPECT_TRUE(dm.m[3]);
  for (std::size_t s = 0; s < 4; ++s) {
    EXPECT_FALSE(dm.q[s]);
    EXPECT_EQ(dm.program.variable(*dm.y[s]).upper, Rational(dm.classes.count(s)));
  }
  EXPECT_EQ(dm.program.num_variables(), 6u);
}

TEST(BuildDistanceLp, EliminationConstraintCount) {
  auto e = table1();
  auto dm = build_distance_lp(order(e, {"D", "B", "A", "C"}), e, Mode::modify);
  EXPECT_EQ(dm.num_elimination_constraints, 6u);
  EXPECT_EQ(dm.classes.num_classes(), 16u);
}

TEST(BuildDistanceLp, Preconditions) {
  auto e = table1();
  EXPECT_THROW(build_distance_lp(order(e, {"A"}), e, Mode::modify), PreconditionError);
  EXPECT_THROW(build_distance_lp({0, 0}, e, Mode::modify), PreconditionError);
  EXPECT_THROW(build_distance_lp(order(e, {"A", "B", "C"}), e, Mode::modify, 2), GuardError);
}

TEST(DistanceTo, Table1Values) {
  auto e = table1();
  EXPECT_EQ(distance_to(order(e, {"B", "D"}), e, Mode::modify, false).value, 28);
  EXPECT_EQ(distance_to(order(e, {"A", "D"}), e, Mode::modify, false).value, 38);
  EXPECT_EQ(distance_to(order(e, {"C", "D"}), e, Mode::modify, false).value, 38);
  EXPECT_EQ(distance_to(order(e, {"A", "C"}), e, Mode::modify, false).value, 0);
  EXPECT_EQ(distance_to(order(e, {"A", "D"}), e, Mode::add, false).value, 76);
}

TEST(DistanceTo, Table1Leaves) {
  auto e = table1();
  EXPECT_EQ(distance_to(order(e, {"D", "B", "A", "C"}), e, Mode::modify, true).value, 3);
  EXPECT_EQ(distance_to(order(e, {"B", "D", "A", "C"}), e, Mode::modify, true).value, 8);
  // The tabulated order costs nothing.
  EXPECT_EQ(distance_to(order(e, {"D", "C", "B", "A"}), e, Mode::modify, true).value, 0);
}

TEST(DistanceTo, RelaxationNeverExceedsExact) {
  auto e = table1();
  for (auto mode : {Mode::modify, Mode::add, Mode::remove}) {
    EliminationOrder pi{0, 1, 2, 3};
    do {
      auto relaxed = distance_to(pi, e, mode, false);
      auto exact = distance_to(pi, e, mode, true);
      EXPECT_LE(relaxed.value, exact.value);
      EXPECT_EQ(Rational(relaxed.value), relaxed.lp_optimum.ceil());
      if (relaxed.integral) {
        EXPECT_EQ(relaxed.value, exact.value);
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
}

// The reported profile must actually realise the order round by round.
TEST(DistanceTo, ProfileRealisesOrder) {
  auto e = table1();
  for (auto mode : {Mode::modify, Mode::add, Mode::remove}) {
    EliminationOrder pi{3, 1, 0, 2};
    auto dm = build_distance_lp(pi, e, mode);
    auto r = solve_distance(dm, true);
    ASSERT_EQ(r.profile.size(), 16u);
    Rational sum;
    for (const auto& y : r.profile) {
      EXPECT_TRUE(y.is_integer());
      sum += y;
    }
    if (mode == Mode::modify) {
      EXPECT_EQ(sum, Rational(86));
    }
    if (mode == Mode::add) {
      EXPECT_EQ(sum, Rational(86 + r.value));
    }
    if (mode == Mode::remove) {
      EXPECT_EQ(sum, Rational(86 - r.value));
    }
    for (std::size_t round = 0; round + 1 < pi.size(); ++round) {
      std::vector<Rational> t(pi.size());
      for (std::size_t s = 0; s < r.profile.size(); ++s) {
        if (auto p = counting_position(static_cast<ClassMask>(s), round)) t[*p] += r.profile[s];
      }
      for (std::size_t j = round + 1; j < pi.size(); ++j) EXPECT_LE(t[round], t[j]);
    }
  }
}

TEST(DistanceTo, LeavesMatchEditOracle) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto e = random_election(seed, 3, 4 + static_cast<BallotCount>(seed % 5), 2 + seed % 3);
    for (auto mode : {Mode::modify, Mode::add, Mode::remove}) {
      EliminationOrder pi{0, 1, 2};
      do {
        auto d = distance_to(pi, e, mode, true).value;
        auto found = order_edit_oracle(e, pi, mode, d);
        ASSERT_TRUE(found) << "seed " << seed << " mode " << to_string(mode);
        EXPECT_EQ(*found, d) << "seed " << seed << " mode " << to_string(mode);
        ++checked;
      } while (std::next_permutation(pi.begin(), pi.end()));
    }
  }
  EXPECT_EQ(checked, 12 * 3 * 6);
}

}  // namespace
}  // namespace irvmargin
