#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "irvmargin/search.hpp"

namespace irvmargin::cli {

enum class Command { compute, tabulate };
enum class Format { text, json };

struct RunConfig {
  Command command = Command::compute;
  std::string input;
  Mode mode = Mode::modify;
  Algorithm algorithm = Algorithm::margin;
  BoundKind bound = BoundKind::lb2;
  std::optional<BallotCount> cap;
  TiePolicy tie_policy = TiePolicy::lexicographic;
  Format format = Format::text;
  std::size_t threads = 1;
  bool dump_lp = false;
  std::string dump_dir = "lp_dump";
};

/// Runs one command. The report goes to `out`, diagnostics to `err`.
/// Returns 0 on success and 1 on any input, guard or I/O failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments (argv[0] is the program name) and runs. Usage errors
/// return 2.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace irvmargin::cli
