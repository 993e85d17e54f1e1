#include "decomp1d/bench.hpp"

#include <algorithm>
#include <chrono>

#include "decomp1d/format.hpp"
#include "decomp1d/norms.hpp"

namespace decomp1d {

namespace {

constexpr double kOracleTol = 1e-10;

}  // namespace

const MethodBench& BenchReport::at(Method m) const {
  for (const auto& b : methods) {
    if (b.method == m) return b;
  }
  throw InvalidArgument("method not present in bench report");
}

BenchReport run_benchmark(const Problem<double>& problem, Index N, int M, int reps,
                          int quad_points) {
  if (reps < 3) throw InvalidArgument("benchmark needs at least 3 repetitions");
  if (M < 1) throw InvalidArgument("benchmark needs M >= 1");

  BenchReport report{problem.name, N, M, {}};
  const auto error_quad = gauss_legendre<double>(5);
  const auto truncated = semi_analytic_U_M(problem, M, kOracleTol);
  const auto exact = exact_solution_via_flux(problem, kOracleTol);

  for (Method method : {Method::Original, Method::Improved, Method::DirectFEM}) {
    const MethodConfig config{method, M, N, quad_points};
    auto first = run_method(problem, config);  // warmup, untimed

    std::vector<std::int64_t> times;
    times.reserve(reps);
    for (int r = 0; r < reps; ++r) {
      const auto start = std::chrono::steady_clock::now();
      auto result = run_method(problem, config);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      if (result.solve_count != first.solve_count ||
          result.assembly_count != first.assembly_count ||
          result.factorization_count != first.factorization_count) {
        throw Error("operation counters changed between repetitions");
      }
    }
    std::nth_element(times.begin(), times.begin() + reps / 2, times.end());

    MethodBench b;
    b.method = method;
    b.solves = first.solve_count;
    b.assemblies = first.assembly_count;
    b.factorizations = first.factorization_count;
    b.wall_ns_median = times[reps / 2];
    b.l2_error = l2_error(first.U_M, method == Method::DirectFEM ? exact : truncated, error_quad);
    report.methods.push_back(b);
  }
  return report;
}

std::vector<std::string> to_csv_rows(const BenchReport& report) {
  std::vector<std::string> rows;
  for (const auto& b : report.methods) {
    rows.push_back(report.problem + "," + std::to_string(report.N) + "," +
                   std::to_string(report.M) + "," + std::string(method_name(b.method)) + "," +
                   std::to_string(b.solves) + "," + std::to_string(b.assemblies) + "," +
                   std::to_string(b.factorizations) + "," + std::to_string(b.wall_ns_median) +
                   "," + format_csv(b.l2_error));
  }
  return rows;
}

}  // namespace decomp1d
