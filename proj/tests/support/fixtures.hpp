#pragma once

#include <string>

#include "irvmargin/election.hpp"

namespace irvmargin::testing {

inline std::string data_path(const std::string& name) {
  return std::string(IRVMARGIN_DATA_DIR) + "/" + name;
}

/// Four-candidate worked example: 86 ballots, A wins, last-round margin 17.
inline Election table1() { return load_election(data_path("table1.txt")); }

inline Election table1_scaled() {
  return parse_election(
      "candidates: A,B,C,D\n"
      "8: A,C,B,D\n"
      "4: B,C,A,D\n"
      "2: C,A,B,D\n"
      "2: C,A,D\n"
      "1: D,B,C,A\n");
}

inline CandidateId id(const Election& e, const std::string& name) { return *e.find(name); }

inline EliminationOrder order(const Election& e, std::initializer_list<const char*> names) {
  EliminationOrder out;
  for (const char* n : names) out.push_back(id(e, n));
  return out;
}

inline CandidateSet set_of(const Election& e, std::initializer_list<const char*> names) {
  return CandidateSet::of(order(e, names));
}

}  // namespace irvmargin::testing
