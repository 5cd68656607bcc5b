#include "irvmargin/election.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

namespace irvmargin {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::modify:
      return "modify";
    case Mode::add:
      return "add";
    case Mode::remove:
      return "delete";
  }
  return "modify";
}

Mode mode_from_string(std::string_view text) {
  if (text == "modify") return Mode::modify;
  if (text == "add") return Mode::add;
  if (text == "delete") return Mode::remove;
  throw PreconditionError("unknown mode '" + std::string(text) + "'");
}

Election::Election(std::vector<std::string> candidate_names, std::vector<BallotGroup> groups)
    : names_(std::move(candidate_names)) {
  if (names_.size() > kMaxCandidates) {
    throw PreconditionError("at most " + std::to_string(kMaxCandidates) + " candidates supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ParseError("empty candidate name");
    if (!seen.insert(n).second) throw ParseError("duplicate candidate name '" + n + "'");
  }

  // Merge duplicates while keeping first-appearance order.
  std::map<Ranking, std::size_t> index;
  for (auto& g : groups) {
    if (g.count <= 0) throw PreconditionError("ballot group counts must be positive");
    CandidateSet mentioned;
    for (CandidateId c : g.ranking) {
      if (c >= names_.size()) throw PreconditionError("ranking mentions unknown candidate");
      if (mentioned.contains(c)) throw PreconditionError("ranking mentions a candidate twice");
      mentioned.insert(c);
    }
    total_ += g.count;
    auto [it, inserted] = index.emplace(g.ranking, groups_.size());
    if (inserted) {
      groups_.push_back(std::move(g));
    } else {
      groups_[it->second].count += g.count;
    }
  }
}

std::optional<CandidateId> Election::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<CandidateId>(it - names_.begin());
}

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_names(std::string_view s) {
  std::vector<std::string_view> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Election parse_election(std::string_view text) {
  std::vector<std::string> names;
  std::vector<BallotGroup> groups;
  bool have_header = false;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected ':'");
    auto head = trim(line.substr(0, colon));
    auto body = line.substr(colon + 1);

    if (!have_header) {
      if (head != "candidates") fail("expected 'candidates:' header");
      for (auto n : split_names(body)) {
        if (n.empty()) fail("empty candidate name");
        names.emplace_back(n);
      }
      if (names.empty()) fail("empty candidate header");
      have_header = true;
      // Validates names early so errors carry the header line number.
      std::unordered_set<std::string_view> seen;
      for (const auto& n : names) {
        if (!seen.insert(n).second) fail("duplicate candidate name '" + n + "'");
      }
      continue;
    }

    BallotCount count = 0;
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), count);
    if (head.empty() || ec != std::errc() || ptr != head.data() + head.size()) {
      fail("malformed count '" + std::string(head) + "'");
    }
    if (count <= 0) fail("count must be positive");

    BallotGroup group;
    group.count = count;
    CandidateSet mentioned;
    for (auto n : split_names(body)) {
      auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end()) fail("unknown candidate '" + std::string(n) + "'");
      auto c = static_cast<CandidateId>(it - names.begin());
      if (mentioned.contains(c)) fail("candidate '" + std::string(n) + "' ranked twice");
      mentioned.insert(c);
      group.ranking.push_back(c);
    }
    groups.push_back(std::move(group));
  }

  if (!have_header) throw ParseError("missing 'candidates:' header");
  return Election(std::move(names), std::move(groups));
}

Election load_election(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open ballot file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_election(buf.str());
}

std::string format_election(const Election& election) {
  std::ostringstream out;
  out << "candidates: ";
  for (std::size_t i = 0; i < election.num_candidates(); ++i) {
    out << (i ? "," : "") << election.name(static_cast<CandidateId>(i));
  }
  out << '\n';
  for (const auto& g : election.groups()) {
    out << g.count << ':';
    for (std::size_t i = 0; i < g.ranking.size(); ++i) {
      out << (i ? "," : " ") << election.name(g.ranking[i]);
    }
    out << '\n';
  }
  return out.str();
}

Ranking project(const Ranking& ranking, CandidateSet standing) {
  Ranking out;
  for (CandidateId c : ranking) {
    if (standing.contains(c)) out.push_back(c);
  }
  return out;
}

std::optional<CandidateId> first_standing(const Ranking& ranking, CandidateSet standing) {
  for (CandidateId c : ranking) {
    if (standing.contains(c)) return c;
  }
  return std::nullopt;
}

std::vector<BallotCount> tallies(const Election& election, CandidateSet standing) {
  std::vector<BallotCount> t(election.num_candidates(), 0);
  for (const auto& g : election.groups()) {
    if (auto c = first_standing(g.ranking, standing)) t[*c] += g.count;
  }
  return t;
}

BallotCount tally(const Election& election, CandidateSet standing, CandidateId c) {
  if (!standing.contains(c)) throw PreconditionError("tally: candidate is not standing");
  BallotCount n = 0;
  for (const auto& g : election.groups()) {
    if (first_standing(g.ranking, standing) == c) n += g.count;
  }
  return n;
}

BallotCount exhausted(const Election& election, CandidateSet standing) {
  BallotCount n = 0;
  for (const auto& g : election.groups()) {
    if (!first_standing(g.ranking, standing)) n += g.count;
  }
  return n;
}

BallotCount primary_vote(const Election& election, CandidateId c) {
  BallotCount n = 0;
  for (const auto& g : election.groups()) {
    if (!g.ranking.empty() && g.ranking.front() == c) n += g.count;
  }
  return n;
}

BallotCount delta(const Election& election, CandidateId c, CandidateId x) {
  if (c == x) throw PreconditionError("delta: candidates must differ");
  BallotCount n = 0;
  for (const auto& g : election.groups()) {
    for (CandidateId r : g.ranking) {
      if (r == c) {
        n += g.count;
        break;
      }
      if (r == x) break;
    }
  }
  return n;
}

BallotCount delta_standing(const Election& election, CandidateId c, CandidateId x,
                           CandidateSet standing) {
  if (c == x || !standing.contains(c) || !standing.contains(x)) {
    throw PreconditionError("delta_standing: need distinct c, x inside the standing set");
  }
  return tally(election, standing, c);
}

}  // namespace irvmargin
