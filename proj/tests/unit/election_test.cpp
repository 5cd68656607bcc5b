#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace irvmargin {
namespace {

using testing::id;
using testing::order;
using testing::set_of;
using testing::table1;

TEST(ParseElection, Table1) {
  auto e = table1();
  EXPECT_EQ(e.num_candidates(), 4u);
  EXPECT_EQ(e.total_ballots(), 86);
  ASSERT_EQ(e.groups().size(), 5u);
  EXPECT_EQ(e.groups()[0].count, 40);
  EXPECT_EQ(e.groups()[0].ranking, order(e, {"A", "C", "B", "D"}));
  EXPECT_EQ(e.groups()[3].ranking, order(e, {"C", "A", "D"}));
}

TEST(ParseElection, HeaderOnlyIsEmptyElection) {
  auto e = parse_election("candidates: A,B,C\n");
  EXPECT_EQ(e.total_ballots(), 0);
  EXPECT_TRUE(e.groups().empty());
  EXPECT_EQ(primary_vote(e, 1), 0);
}

TEST(ParseElection, RejectsDuplicateCandidateInRanking) {
  EXPECT_THROW(parse_election("candidates: A,B,C\n7: A,A,B\n"), ParseError);
}

TEST(ParseElection, RejectsZeroAndNegativeCounts) {
  EXPECT_THROW(parse_election("candidates: A,B\n0: A\n"), ParseError);
  EXPECT_THROW(parse_election("candidates: A,B\n-3: A\n"), ParseError);
}

TEST(ParseElection, ErrorsCarryLineNumbers) {
  try {
    parse_election("candidates: A,B\n# note\n\n3: A,Z\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(ParseElection, RejectsMalformedInput) {
  EXPECT_THROW(parse_election(""), ParseError);
  EXPECT_THROW(parse_election("3: A\n"), ParseError);
  EXPECT_THROW(parse_election("candidates: A,A\n"), ParseError);
  EXPECT_THROW(parse_election("candidates: A,,B\n"), ParseError);
  EXPECT_THROW(parse_election("candidates: A,B\nx: A\n"), ParseError);
  EXPECT_THROW(parse_election("candidates: A,B\n3 A\n"), ParseError);
}

TEST(ParseElection, MergesDuplicateRankings) {
  auto e = parse_election("candidates: A,B\n3: A,B\n2: B\n4: A , B\n");
  ASSERT_EQ(e.groups().size(), 2u);
  EXPECT_EQ(e.groups()[0].count, 7);
  EXPECT_EQ(e.total_ballots(), 9);
}

TEST(ParseElection, EmptyRankingIsExhausted) {
  auto e = parse_election("candidates: A,B\n3:\n2: B\n");
  EXPECT_EQ(e.total_ballots(), 5);
  EXPECT_EQ(exhausted(e, e.candidates()), 3);
  EXPECT_EQ(tally(e, e.candidates(), 1), 2);
}

TEST(ParseElection, CommentsAndWhitespaceIgnored) {
  auto plain = parse_election("candidates: A,B\n3: A,B\n2: B\n");
  auto noisy = parse_election("# header\n\n  candidates:  A , B  \n# x\n 3 : A, B \n\n2:B\n");
  EXPECT_EQ(plain, noisy);
}

TEST(FormatElection, RoundTrips) {
  auto e = table1();
  EXPECT_EQ(parse_election(format_election(e)), e);
}

TEST(LoadElection, MissingFileIsError) {
  EXPECT_THROW(load_election("/nonexistent/ballots.txt"), Error);
}

TEST(Election, RejectsInvalidGroups) {
  EXPECT_THROW(Election({"A", "B"}, {{{0, 0}, 1}}), PreconditionError);
  EXPECT_THROW(Election({"A", "B"}, {{{2}, 1}}), PreconditionError);
  EXPECT_THROW(Election({"A", "B"}, {{{0}, 0}}), PreconditionError);
}

TEST(Project, DefinitionExamples) {
  auto e = parse_election("candidates: A,B,C,D,E,F,G\n");
  auto r = order(e, {"A", "B", "D", "C"});
  EXPECT_EQ(project(r, set_of(e, {"B", "C"})), order(e, {"B", "C"}));
  auto r2 = order(e, {"F", "D", "G", "B", "A"});
  EXPECT_EQ(project(r2, set_of(e, {"B", "C", "D", "E"})), order(e, {"D", "B"}));
  EXPECT_EQ(project(r, e.candidates()), r);
}

TEST(Tally, Table1Rounds) {
  auto e = table1();
  EXPECT_EQ(tally(e, e.candidates(), id(e, "A")), 40);
  EXPECT_EQ(tally(e, set_of(e, {"A", "B", "C"}), id(e, "B")), 26);
  EXPECT_EQ(tally(e, set_of(e, {"A", "B"}), id(e, "A")), 60);
  EXPECT_THROW(tally(e, set_of(e, {"A", "B"}), id(e, "C")), PreconditionError);
}

TEST(Tally, TalliesPlusExhaustedCoverEveryBallot) {
  auto e = parse_election("candidates: A,B,C\n4: A\n3: B,C\n2: C,A\n1:\n");
  for (std::uint64_t bits = 1; bits < 8; ++bits) {
    CandidateSet s(bits);
    auto t = tallies(e, s);
    BallotCount sum = exhausted(e, s);
    for (auto v : t) sum += v;
    EXPECT_EQ(sum, e.total_ballots());
  }
}

TEST(PrimaryVote, Table1) {
  auto e = table1();
  EXPECT_EQ(primary_vote(e, id(e, "D")), 5);
  EXPECT_EQ(primary_vote(e, id(e, "C")), 20);
}

TEST(Delta, Table1) {
  auto e = table1();
  EXPECT_EQ(delta(e, id(e, "A"), id(e, "D")), 81);
  EXPECT_EQ(delta(e, id(e, "D"), id(e, "A")), 5);
  EXPECT_EQ(delta(e, id(e, "C"), id(e, "B")), 60);
  EXPECT_THROW(delta(e, 0, 0), PreconditionError);
}

TEST(DeltaStanding, Table1) {
  auto e = table1();
  EXPECT_EQ(delta_standing(e, id(e, "B"), id(e, "A"), set_of(e, {"A", "B"})), 26);
  EXPECT_EQ(delta_standing(e, id(e, "D"), id(e, "A"), set_of(e, {"A", "D"})), 5);
}

TEST(DeltaStanding, TwoElementSetMatchesDeltaWhenBallotsAreComplete) {
  auto e = table1();
  // Every Table 1 ballot ranks A, B and C.
  for (const char* c : {"A", "B", "C"}) {
    for (const char* x : {"A", "B", "C"}) {
      if (std::string(c) == x) continue;
      EXPECT_EQ(delta_standing(e, id(e, c), id(e, x), set_of(e, {c, x})),
                delta(e, id(e, c), id(e, x)));
    }
  }
}

TEST(Mode, StringRoundTrip) {
  for (Mode m : {Mode::modify, Mode::add, Mode::remove}) {
    EXPECT_EQ(mode_from_string(to_string(m)), m);
  }
  EXPECT_EQ(to_string(Mode::remove), "delete");
  EXPECT_THROW(mode_from_string("subtract"), PreconditionError);
}

TEST(CandidateSet, Operations) {
  auto s = CandidateSet::of(std::vector<CandidateId>{0, 2, 5});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.without(2).members(), (std::vector<CandidateId>{0, 5}));
  EXPECT_TRUE(s.without(5).subset_of(s));
  EXPECT_EQ((CandidateSet::all(6) - s).members(), (std::vector<CandidateId>{1, 3, 4}));
  EXPECT_EQ(CandidateSet::all(64).size(), 64u);
}

}  // namespace
}  // namespace irvmargin
