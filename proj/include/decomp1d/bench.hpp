#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "decomp1d/decomposition.hpp"
#include "decomp1d/problem.hpp"

namespace decomp1d {

struct MethodBench {
  Method method = Method::Improved;
  int solves = 0;
  int assemblies = 0;
  int factorizations = 0;
  std::int64_t wall_ns_median = 0;
  double l2_error = 0;
};

/// Original, Improved and DirectFEM on one (problem, N, M).
struct BenchReport {
  std::string problem;
  Index N = 0;
  int M = 0;
  std::vector<MethodBench> methods;

  const MethodBench& at(Method m) const;
};

inline constexpr const char* kBenchCsvHeader =
    "problem,N,M,method,solves,assemblies,factorizations,wall_ns_median,l2_error";

/// Times each method `reps` times after one untimed warmup run and records the
/// median. Decomposition methods are measured against the mesh-free U_M of the
/// same order, the direct solve against the flux-oracle solution. Throws if
/// operation counters differ between repetitions.
BenchReport run_benchmark(const Problem<double>& problem, Index N, int M, int reps,
                          int quad_points = 3);

std::vector<std::string> to_csv_rows(const BenchReport& report);

}  // namespace decomp1d
