#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "irvmargin/oracle.hpp"
#include "irvmargin/search.hpp"

namespace irvmargin {
namespace {

using testing::id;
using testing::order;

TEST(PossibleWinners, NoTies) {
  auto e = testing::table1();
  EXPECT_EQ(possible_winners(e).members(), (std::vector<CandidateId>{id(e, "A")}));
}

TEST(PossibleWinners, TieOpensBothBranches) {
  auto e = parse_election("candidates: A,B,C\n4: A\n3: B,A\n3: C,B\n");
  // B and C tie for last; eliminating C elects B, eliminating B elects A.
  auto w = possible_winners(e);
  EXPECT_TRUE(w.contains(id(e, "A")));
  EXPECT_TRUE(w.contains(id(e, "B")));
  EXPECT_FALSE(w.contains(id(e, "C")));
}

TEST(AdmitsOrder, Table1) {
  auto e = testing::table1();
  EXPECT_TRUE(admits_order(e, order(e, {"D", "C", "B", "A"})));
  EXPECT_FALSE(admits_order(e, order(e, {"C", "D", "B", "A"})));
}

TEST(EditOracle, ScaledTable1) {
  auto e = testing::table1_scaled();
  for (auto mode : {Mode::modify, Mode::add, Mode::remove}) {
    EXPECT_EQ(edit_oracle(e, {2, mode}), 1) << to_string(mode);
    EXPECT_EQ(edit_margin(e, mode), 1) << to_string(mode);
  }
  EXPECT_EQ(compute_margin(e).margin, 1);
  EXPECT_EQ(last_round_margin(e), 4);
}

TEST(EditOracle, ThreeAgainstFive) {
  auto e = parse_election("candidates: A,B\n3: A\n5: B\n");
  EXPECT_EQ(edit_oracle(e, {1, Mode::modify}), 1);
  EXPECT_EQ(edit_oracle(e, {1, Mode::add}), std::nullopt);
  EXPECT_EQ(edit_oracle(e, {2, Mode::add}), 2);
  EXPECT_EQ(edit_oracle(e, {2, Mode::remove}), 2);
}

TEST(EditOracle, ZeroBudget) {
  auto e = testing::table1_scaled();
  EXPECT_EQ(edit_oracle(e, {0, Mode::modify}), std::nullopt);
  // A tabulated tie already lets the adversary pick the other winner.
  auto tied = parse_election("candidates: A,B\n2: A\n2: B\n");
  EXPECT_EQ(edit_oracle(tied, {0, Mode::modify}), 0);
}

TEST(EditOracle, MonotoneInBudget) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto e = random_election(seed, 3, 9, 3);
    for (auto mode : {Mode::modify, Mode::add, Mode::remove}) {
      std::optional<BallotCount> first;
      for (BallotCount k = 0; k <= 6; ++k) {
        auto v = edit_oracle(e, {k, mode});
        if (first) {
          EXPECT_EQ(v, first) << "seed " << seed;
        } else if (v) {
          first = v;
        }
      }
    }
  }
}

TEST(EditOracle, Guards) {
  auto big = random_election(1, 5, 10, 3);
  EXPECT_THROW(edit_oracle(big, {1, Mode::modify}), GuardError);
  auto many = random_election(1, 3, 41, 3);
  EXPECT_THROW(edit_oracle(many, {1, Mode::modify}), GuardError);
  EXPECT_NO_THROW(edit_oracle(many, {1, Mode::modify}, TiePolicy::lexicographic, {3, 50}));
}

TEST(OrderEditOracle, TabulatedOrderIsFree) {
  auto e = testing::table1_scaled();
  EXPECT_EQ(order_edit_oracle(e, order(e, {"D", "C", "B", "A"}), Mode::modify, 0), 0);
  EXPECT_EQ(order_edit_oracle(e, order(e, {"D", "B", "A", "C"}), Mode::modify, 0), std::nullopt);
}

TEST(RandomElection, Deterministic) {
  EXPECT_EQ(random_election(1, 3, 10, 4), random_election(1, 3, 10, 4));
  EXPECT_NE(random_election(1, 3, 10, 4), random_election(2, 3, 10, 4));
}

TEST(RandomElection, ShapeAndInvariants) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto e = random_election(seed, 5, 37, 6);
    EXPECT_EQ(e.num_candidates(), 5u);
    EXPECT_EQ(e.total_ballots(), 37);
    EXPECT_LE(e.groups().size(), 6u);
    EXPECT_EQ(e.names()[0], "A");
    EXPECT_EQ(e.names()[4], "E");
    for (const auto& g : e.groups()) {
      EXPECT_GE(g.ranking.size(), 1u);
      EXPECT_GE(g.count, 1);
    }
  }
}

TEST(RandomElection, RejectsNonPositiveParameters) {
  EXPECT_THROW(random_election(1, 0, 10, 2), PreconditionError);
  EXPECT_THROW(random_election(1, 3, 0, 2), PreconditionError);
  EXPECT_THROW(random_election(1, 3, 10, 0), PreconditionError);
}

}  // namespace
}  // namespace irvmargin
