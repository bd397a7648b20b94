#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "alphaidx/graph.hpp"

namespace alphaidx::cli {

enum class ExitCode : int { ok = 0, violation = 1, usage = 2 };

/// Options shared by every subcommand.
struct RunConfig {
  std::string command;
  std::vector<double> alpha_grid{0.0};
  double tolerance = 1e-12;
  double epsilon_strict = 1e-9;
  std::string output;  // empty: stdout
  int worker_count = 1;
  std::uint64_t seed = 20170601;
};

/// Comma-separated decimals, each in [0, 1). Throws std::invalid_argument.
std::vector<double> parse_alpha_grid(std::string_view text);

/// Family mini-language: complete:n, path:n, cycle:n, star:n, kme:n,
/// bug:p,q,r, kite:p,q.
Graph parse_family(std::string_view spec);

/// "family:<spec>", "graph6:<code>", "edgelist:<file>", or a bare family spec.
Graph parse_graph_source(std::string_view source);

/// Worker count from ALPHAIDX_WORKERS, else 1.
int default_worker_count();

/// Full command-line entry point; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alphaidx::cli
