#include "decomp1d/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "decomp1d/bench.hpp"
#include "decomp1d/experiment.hpp"
#include "decomp1d/format.hpp"
#include "decomp1d/verify.hpp"

namespace decomp1d {

namespace {

// Thrown for malformed specs discovered after flag parsing.
struct UsageError : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

template <typename T>
std::vector<T> sorted_list(std::vector<T> values, const char* flag) {
  if (values.empty()) throw UsageError(std::string(flag) + " must not be empty");
  for (auto v : values) {
    if (v < 1) throw UsageError(std::string(flag) + " entries must be >= 1");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

MethodConfig config_for(const RunSpec& spec, Index N, int M) {
  MethodConfig c;
  c.method = spec.method;
  c.N = N;
  c.M = M;
  c.quad_points = spec.quad_points;
  c.validate();
  return c;
}

void cmd_solve(const RunSpec& spec, std::ostream& out) {
  const auto problem = builtin_problem(spec.problem);
  const auto config = config_for(spec, spec.N_list.front(), spec.M_list.front());
  const auto report = evaluate_errors(problem, config);
  if (spec.format == OutputFormat::Csv) {
    out << kErrorCsvHeader << '\n' << to_csv_row(report) << '\n';
    return;
  }
  out << "problem  " << report.problem << '\n'
      << "method   " << method_name(report.method) << '\n'
      << "N        " << report.N << '\n'
      << "M        " << report.M << '\n'
      << "L2       " << format_parenthesized(report.l2_error) << '\n'
      << "H1       " << format_parenthesized(report.h1_error) << '\n'
      << "ref      " << reference_name(report.reference) << '\n';
}

void cmd_table(const RunSpec& spec, std::ostream& out) {
  const auto problem = builtin_problem(spec.problem);
  ReferenceCache cache;
  std::vector<std::vector<ErrorReport>> grid;
  for (Index N : spec.N_list) {
    auto& row = grid.emplace_back();
    for (int M : spec.M_list) row.push_back(evaluate_errors(problem, config_for(spec, N, M), &cache));
  }
  if (spec.format == OutputFormat::Csv) {
    out << kErrorCsvHeader << '\n';
    for (const auto& row : grid) {
      for (const auto& r : row) out << to_csv_row(r) << '\n';
    }
    return;
  }
  out << problem.name << ", " << method_name(spec.method) << ", L2 errors\n";
  constexpr std::size_t w = 13;
  out << pad("N", 7);
  for (int M : spec.M_list) out << pad("M=" + std::to_string(M), w);
  out << '\n';
  std::string refs;
  for (const auto& row : grid) {
    out << pad(std::to_string(row.front().N), 7);
    for (const auto& r : row) {
      out << pad(format_parenthesized(r.l2_error), w);
      const std::string name(reference_name(r.reference));
      if (refs.find(name) == std::string::npos) refs += (refs.empty() ? "" : ", ") + name;
    }
    out << '\n';
  }
  out << "reference: " << refs << '\n';
}

void cmd_bench(const RunSpec& spec, std::ostream& out) {
  const auto problem = builtin_problem(spec.problem);
  if (spec.reps < 3) throw UsageError("--reps must be at least 3");
  const auto report =
      run_benchmark(problem, spec.N_list.front(), spec.M_list.front(), spec.reps, spec.quad_points);
  if (spec.format == OutputFormat::Csv) {
    out << kBenchCsvHeader << '\n';
    for (const auto& row : to_csv_rows(report)) out << row << '\n';
    return;
  }
  out << report.problem << ", N=" << report.N << ", M=" << report.M << ", median of "
      << spec.reps << " runs\n";
  out << pad("method", 10) << pad("solves", 8) << pad("assemb", 8) << pad("factor", 8)
      << pad("wall_ms", 12) << pad("L2", 13) << '\n';
  for (const auto& m : report.methods) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", double(m.wall_ns_median) / 1e6);
    out << pad(std::string(method_name(m.method)), 10) << pad(std::to_string(m.solves), 8)
        << pad(std::to_string(m.assemblies), 8) << pad(std::to_string(m.factorizations), 8)
        << pad(ms, 12) << pad(format_parenthesized(m.l2_error), 13) << '\n';
  }
}

bool cmd_verify(const RunSpec& spec, std::ostream& out) {
  const auto problem = builtin_problem(spec.problem);
  const auto results = run_suite(spec.suite, problem, spec.M_list);
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << "/" << results.size() << " properties passed\n";
  return failed == 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decomposition solvers for -(kappa u')' = f on (0, L)", "decomp1d"};
  app.require_subcommand(1);

  RunSpec spec;
  long long N = 0;
  int M = 0;
  std::vector<long long> N_list;
  std::vector<int> M_list;
  std::string method = "improved";
  std::string format = "csv";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--problem", spec.problem, "Problem id: ex1, ex2, ex3, ex4")
        ->capture_default_str();
    sub->add_option("--method", method, "original | improved | direct")->capture_default_str();
    sub->add_option("--quad", spec.quad_points, "Gauss points per element, 2..5")
        ->capture_default_str();
    sub->add_option("--format", format, "csv | text")->capture_default_str();
    sub->add_option("--out", spec.out_path, "Write output to this file instead of stdout");
  };

  auto* solve = app.add_subcommand("solve", "Run one method and report its errors");
  add_common(solve);
  solve->add_option("--N", N, "Number of elements")->required();
  solve->add_option("--M", M, "Truncation order (ignored by direct)");

  auto* table = app.add_subcommand("table", "Error grid, rows N by columns M");
  add_common(table);
  table->add_option("--N-list", N_list, "Comma-separated element counts (default 8,32,128,512,2048)")
      ->delimiter(',');
  table->add_option("--M-list", M_list, "Comma-separated truncation orders (default 2,4,6,8,10)")
      ->delimiter(',');

  auto* bench = app.add_subcommand("bench", "Time original, improved and direct");
  add_common(bench);
  bench->add_option("--N", N, "Number of elements")->required();
  bench->add_option("--M", M, "Truncation order")->required();
  bench->add_option("--reps", spec.reps, "Timed repetitions, at least 3")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check the convergence-theory invariants");
  add_common(verify);
  verify->add_option("--M-list", M_list, "Orders for the theorem bound (default 1..8)")
      ->delimiter(',');
  verify->add_option("--suite", spec.suite,
                     "tail | theorem | equivalence | decay | convergence | all")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    spec.subcommand = app.get_subcommands().front()->get_name();
    spec.method = parse_method(method);
    if (format == "csv") {
      spec.format = OutputFormat::Csv;
    } else if (format == "text") {
      spec.format = OutputFormat::Text;
    } else {
      throw UsageError("--format must be csv or text");
    }
    if (spec.quad_points < 2 || spec.quad_points > 5) throw UsageError("--quad must be in 2..5");
    const auto& ids = builtin_problem_ids();
    if (std::find(ids.begin(), ids.end(), spec.problem) == ids.end()) {
      builtin_problem(spec.problem);  // throws with the list of valid ids
    }

    if (spec.subcommand == "solve" || spec.subcommand == "bench") {
      spec.N_list = sorted_list<Index>({Index(N)}, "--N");
      const bool has_M = (spec.subcommand == "solve" ? solve : bench)->count("--M") > 0;
      if (spec.method == Method::DirectFEM && !has_M) {
        spec.M_list = {0};
      } else {
        if (!has_M) {
          throw UsageError("--M is required unless --method direct");
        }
        if (M < 0) throw UsageError("--M must be nonnegative");
        spec.M_list = {M};
      }
    } else if (spec.subcommand == "table") {
      std::vector<Index> ns(N_list.begin(), N_list.end());
      spec.N_list = sorted_list(table->count("--N-list") ? ns : std::vector<Index>{8, 32, 128, 512, 2048},
                                "--N-list");
      spec.M_list =
          sorted_list(table->count("--M-list") ? M_list : std::vector<int>{2, 4, 6, 8, 10}, "--M-list");
    } else {
      spec.M_list = sorted_list(verify->count("--M-list") ? M_list
                                                           : std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8},
                                "--M-list");
      if (std::find(suite_names().begin(), suite_names().end(), spec.suite) == suite_names().end()) {
        throw UsageError("unknown suite '" + spec.suite + "'");
      }
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  bool ok = true;
  try {
    if (spec.subcommand == "solve") cmd_solve(spec, buffer);
    if (spec.subcommand == "table") cmd_table(spec, buffer);
    if (spec.subcommand == "bench") cmd_bench(spec, buffer);
    if (spec.subcommand == "verify") ok = cmd_verify(spec, buffer);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    out << buffer.str();
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (spec.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(spec.out_path, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write " << spec.out_path << '\n';
      return kExitFailure;
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace decomp1d
