#include "irvmargin_cli/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "irvmargin_cli/report_json.hpp"

namespace irvmargin::cli {
namespace {

std::string join_names(const EliminationOrder& order, const Election& e, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += sep;
    out += e.name(order[i]);
  }
  return out;
}

void print_report_text(const MarginReport& r, const Election& e, std::ostream& out) {
  out << "candidates:        " << r.num_candidates << '\n'
      << "ballots:           " << r.num_ballots << '\n'
      << "mode:              " << to_string(r.mode) << '\n'
      << "algorithm:         " << to_string(r.algorithm) << '\n'
      << "bound:             " << to_string(r.bound) << '\n'
      << "winner:            " << e.name(r.winner) << '\n'
      << "elimination_order: " << join_names(r.elimination_order, e, ", ") << '\n'
      << "margin:            " << r.margin << '\n'
      << "lrm:               " << r.lrm << '\n'
      << "lrm_add:           " << r.lrm_add << '\n'
      << "witness_order:     "
      << (r.witness_order ? join_names(*r.witness_order, e, ", ") : std::string("-")) << '\n'
      << "cap:               " << (r.cap ? std::to_string(*r.cap) : std::string("-")) << '\n'
      << "capped:            " << (r.capped ? "true" : "false") << '\n'
      << "tie_caveat:        " << (r.tie_caveat ? "true" : "false") << '\n'
      << "nodes_scored:      " << r.stats.nodes_scored << '\n'
      << "nodes_expanded:    " << r.stats.nodes_expanded << '\n'
      << "lps_solved:        " << r.stats.lps_solved << '\n'
      << "lp_relaxations:    " << r.stats.lp_relaxations << '\n'
      << "elapsed_ms:        " << std::fixed << std::setprecision(3) << r.stats.elapsed_ms
      << '\n';
  out.unsetf(std::ios::floatfield);
  if (r.tie_caveat) {
    out << "note: tabulation broke a tie; the reported margin may understate the true one\n";
  }
}

void print_tabulation_text(const TabulationResult& t, const Election& e, std::ostream& out) {
  out << "candidates: " << e.num_candidates() << '\n' << "ballots:    " << e.total_ballots() << '\n';
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const auto& round = t.rounds[i];
    out << "round " << i + 1 << ':';
    for (CandidateId c : round.standing.members()) out << ' ' << e.name(c) << '=' << round.tallies[c];
    out << " exhausted=" << round.exhausted << '\n';
  }
  for (const auto& tie : t.tie_events) {
    out << "tie in round " << tie.round + 1 << ": " << join_names(tie.candidates, e, ", ") << '\n';
  }
  out << "elimination_order: " << join_names(t.elimination_order, e, ", ") << '\n'
      << "winner:            " << e.name(t.winner) << '\n';
  if (t.rounds.size() >= 2) {
    out << "lrm:               " << last_round_margin(t) << '\n'
        << "lrm_add:           " << last_round_margin_add(t) << '\n';
  }
}

std::string dump_file_name(const EliminationOrder& order, const Election& e) {
  std::string name;
  for (CandidateId c : order) {
    if (!name.empty()) name += '_';
    for (char ch : e.name(c)) {
      bool plain = std::isalnum(static_cast<unsigned char>(ch)) || ch == '-';
      name += plain ? ch : '.';
    }
  }
  return name + ".lp";
}

int run_compute(const RunConfig& config, const Election& election, std::ostream& out) {
  SearchOptions options;
  options.mode = config.mode;
  options.bound = config.bound;
  options.cap = config.cap;
  options.tie_policy = config.tie_policy;
  options.threads = config.threads;
  if (config.dump_lp) {
    std::filesystem::create_directories(config.dump_dir);
    options.on_model = [&](const EliminationOrder& order, const DistanceModel& model) {
      auto path = std::filesystem::path(config.dump_dir) / dump_file_name(order, election);
      std::ofstream file(path);
      file << lp::to_lp_format(model.program, "distance " + join_names(order, election, ","));
      if (!file) throw Error("cannot write " + path.string());
    };
  }
  MarginReport report = run_algorithm(config.algorithm, election, options);
  if (config.format == Format::json) {
    out << report_to_json(report, election.names()).dump(2) << '\n';
  } else {
    print_report_text(report, election, out);
  }
  return 0;
}

int run_tabulate(const RunConfig& config, const Election& election, std::ostream& out) {
  auto result = run_irv(election, config.tie_policy);
  if (config.format == Format::json) {
    out << tabulation_to_json(result, election).dump(2) << '\n';
  } else {
    print_tabulation_text(result, election, out);
  }
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.threads == 0) throw PreconditionError("threads must be at least 1");
    Election election = load_election(config.input);
    return config.command == Command::compute ? run_compute(config, election, out)
                                              : run_tabulate(config, election, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"IRV margin of victory"};
  app.require_subcommand(1);
  RunConfig config;
  std::string mode = "modify", algorithm = "margin", bound = "lb2", tie = "lexicographic",
              format = "text";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--ballots", config.input, "Ballot file")->required();
    cmd->add_option("--tie-policy", tie, "lexicographic | by_index")
        ->check(CLI::IsMember({"lexicographic", "by_index"}));
    cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  };
  auto* compute = app.add_subcommand("compute", "Compute the margin of victory");
  add_common(compute);
  compute->add_option("--mode", mode, "modify | add | delete")
      ->check(CLI::IsMember({"modify", "add", "delete"}));
  compute->add_option("--algorithm", algorithm, "margin | mrsw | exhaustive")
      ->check(CLI::IsMember({"margin", "mrsw", "exhaustive"}));
  compute->add_option("--bound", bound, "lb1 | lb2")->check(CLI::IsMember({"lb1", "lb2"}));
  compute->add_option("--cap", config.cap, "Stop once the margin is known to exceed this")
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
  compute->add_flag("--dump-lp", config.dump_lp, "Write every distance program in LP format");
  compute->add_option("--dump-dir", config.dump_dir, "Directory for --dump-lp output");
  auto* tabulate = app.add_subcommand("tabulate", "Run the IRV count");
  add_common(tabulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  config.command = tabulate->parsed() ? Command::tabulate : Command::compute;
  config.mode = mode_from_string(mode);
  config.algorithm = algorithm_from_string(algorithm);
  config.bound = bound_kind_from_string(bound);
  config.tie_policy = tie_policy_from_string(tie);
  config.format = format == "json" ? Format::json : Format::text;
  return run(config, out, err);
}

}  // namespace irvmargin::cli
