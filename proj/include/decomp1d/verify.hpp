#pragma once

#include <string>
#include <vector>

#include "decomp1d/mesh.hpp"
#include "decomp1d/problem.hpp"

namespace decomp1d {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Explicit tail sums below tail_bound for x in {0.1, 0.5, 1, 2, 5}, M = 1..15.
std::vector<PropertyResult> check_tail_bound();

/// Continuous H1 truncation error against the tail bound for each M.
std::vector<PropertyResult> check_theorem_bound(const Problem<double>& problem,
                                                const std::vector<int>& orders);

/// Original and Improved U_1 agree nodally to 1e-12.
std::vector<PropertyResult> check_m1_equivalence(const Problem<double>& problem, Index N = 128);

/// Original terms: |u_j|_H1 <= 1.05 ||psi||^j / j! |u0|_H1 for j = 1..max_j.
std::vector<PropertyResult> check_factorial_decay(const Problem<double>& problem, Index N = 512,
                                                  int max_j = 6);

/// Direct solve: fitted L2 order over N = 2^5..2^11 lies in [1.9, 2.1].
std::vector<PropertyResult> check_convergence_order(const Problem<double>& problem);

/// Suite names accepted by run_suite: tail, theorem, equivalence, decay,
/// convergence, all.
const std::vector<std::string>& suite_names();

std::vector<PropertyResult> run_suite(const std::string& suite, const Problem<double>& problem,
                                      const std::vector<int>& orders);

/// Least-squares slope of log(error) against log(h).
double fitted_order(const std::vector<double>& h, const std::vector<double>& errors);

}  // namespace decomp1d
