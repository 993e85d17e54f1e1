#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "decomp1d/decomposition.hpp"

namespace decomp1d {

enum class OutputFormat { Csv, Text };

struct RunSpec {
  std::string subcommand;
  std::string problem = "ex1";
  std::vector<Index> N_list;
  std::vector<int> M_list;
  Method method = Method::Improved;
  int quad_points = 3;
  int reps = 5;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;  // empty: standard output
  std::string suite = "all";
};

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name) and runs the subcommand.
/// Returns 0 on success, 1 on a computational failure, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace decomp1d
