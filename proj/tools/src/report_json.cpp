#include "irvmargin_cli/report_json.hpp"

namespace irvmargin::cli {
namespace {

using nlohmann::json;

json names_of(const EliminationOrder& order, const std::vector<std::string>& names) {
  json out = json::array();
  for (CandidateId c : order) out.push_back(names.at(c));
  return out;
}

CandidateId index_of(const std::string& name, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<CandidateId>(i);
  }
  throw ParseError("report mentions unknown candidate '" + name + "'");
}

EliminationOrder order_of(const json& list, const std::vector<std::string>& names) {
  EliminationOrder out;
  for (const auto& n : list) out.push_back(index_of(n.get<std::string>(), names));
  return out;
}

}  // namespace

json report_to_json(const MarginReport& r, const std::vector<std::string>& names) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["candidates"] = names;
  doc["mode"] = std::string(to_string(r.mode));
  doc["algorithm"] = std::string(to_string(r.algorithm));
  doc["bound"] = std::string(to_string(r.bound));
  doc["margin"] = r.margin;
  doc["lrm"] = r.lrm;
  doc["lrm_add"] = r.lrm_add;
  doc["winner"] = names.at(r.winner);
  doc["elimination_order"] = names_of(r.elimination_order, names);
  doc["witness_order"] = r.witness_order ? names_of(*r.witness_order, names) : json(nullptr);
  doc["cap"] = r.cap ? json(*r.cap) : json(nullptr);
  doc["capped"] = r.capped;
  doc["tie_caveat"] = r.tie_caveat;
  doc["num_candidates"] = r.num_candidates;
  doc["num_ballots"] = r.num_ballots;
  doc["nodes_scored"] = r.stats.nodes_scored;
  doc["nodes_expanded"] = r.stats.nodes_expanded;
  doc["lps_solved"] = r.stats.lps_solved;
  doc["lp_relaxations"] = r.stats.lp_relaxations;
  doc["elapsed_ms"] = r.stats.elapsed_ms;
  return doc;
}

MarginReport report_from_json(const json& doc) {
  try {
    if (doc.at("schema").get<int>() != kSchemaVersion) {
      throw ParseError("unsupported report schema " + doc.at("schema").dump());
    }
    const auto names = doc.at("candidates").get<std::vector<std::string>>();
    MarginReport r;
    r.mode = mode_from_string(doc.at("mode").get<std::string>());
    r.algorithm = algorithm_from_string(doc.at("algorithm").get<std::string>());
    r.bound = bound_kind_from_string(doc.at("bound").get<std::string>());
    r.margin = doc.at("margin").get<BallotCount>();
    r.lrm = doc.at("lrm").get<BallotCount>();
    r.lrm_add = doc.at("lrm_add").get<BallotCount>();
    r.winner = index_of(doc.at("winner").get<std::string>(), names);
    r.elimination_order = order_of(doc.at("elimination_order"), names);
    const auto& witness = doc.at("witness_order");
    r.witness_order = witness.is_null() ? std::nullopt
                                        : std::optional<EliminationOrder>(order_of(witness, names));
    if (!doc.at("cap").is_null()) r.cap = doc.at("cap").get<BallotCount>();
    r.capped = doc.at("capped").get<bool>();
    r.tie_caveat = doc.at("tie_caveat").get<bool>();
    r.num_candidates = doc.at("num_candidates").get<std::size_t>();
    r.num_ballots = doc.at("num_ballots").get<BallotCount>();
    r.stats.nodes_scored = doc.at("nodes_scored").get<std::size_t>();
    r.stats.nodes_expanded = doc.at("nodes_expanded").get<std::size_t>();
    r.stats.lps_solved = doc.at("lps_solved").get<std::size_t>();
    r.stats.lp_relaxations = doc.at("lp_relaxations").get<std::size_t>();
    r.stats.elapsed_ms = doc.at("elapsed_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

json tabulation_to_json(const TabulationResult& result, const Election& election) {
  const auto& names = election.names();
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["candidates"] = names;
  doc["num_ballots"] = election.total_ballots();
  doc["winner"] = names.at(result.winner);
  doc["elimination_order"] = names_of(result.elimination_order, names);
  json rounds = json::array();
  for (const auto& round : result.rounds) {
    json tallies = json::object();
    for (CandidateId c : round.standing.members()) tallies[names[c]] = round.tallies[c];
    rounds.push_back({{"standing", names_of(round.standing.members(), names)},
                      {"tallies", tallies},
                      {"exhausted", round.exhausted}});
  }
  doc["rounds"] = rounds;
  json ties = json::array();
  for (const auto& t : result.tie_events) {
    ties.push_back({{"round", t.round}, {"candidates", names_of(t.candidates, names)}});
  }
  doc["tie_events"] = ties;
  const bool contested = result.rounds.size() >= 2;
  doc["lrm"] = contested ? json(last_round_margin(result)) : json(nullptr);
  doc["lrm_add"] = contested ? json(last_round_margin_add(result)) : json(nullptr);
  return doc;
}

}  // namespace irvmargin::cli
