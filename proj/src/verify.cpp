#include "decomp1d/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "decomp1d/decomposition.hpp"
#include "decomp1d/format.hpp"
#include "decomp1d/norms.hpp"

namespace decomp1d {

namespace {

constexpr double kTheoremTol = 1e-10;

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

}  // namespace

std::vector<PropertyResult> check_tail_bound() {
  std::vector<PropertyResult> out;
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    int failures = 0;
    double worst_ratio = 0;
    for (int M = 1; M <= 15; ++M) {
      double term = 1;
      for (int j = 1; j <= M; ++j) term *= x / j;
      double tail = 0;
      for (int j = M + 1; j <= 200; ++j) {
        term *= x / j;
        tail += term;
      }
      const double bound = tail_bound(x, M);
      worst_ratio = std::max(worst_ratio, tail / bound);
      if (!(tail < bound)) ++failures;
    }
    char label[32];
    std::snprintf(label, sizeof label, "tail_bound x=%g", x);
    out.push_back({label, failures == 0,
                   fmt("max tail/bound over M=1..15: %.6g", worst_ratio)});
  }
  return out;
}

std::vector<PropertyResult> check_theorem_bound(const Problem<double>& problem,
                                                const std::vector<int>& orders) {
  std::vector<BoundTriple> triples;
  try {
    triples = theorem_bound_check(problem, orders, kTheoremTol);
  } catch (const BoundViolation& v) {
    triples = v.triples();
  }
  std::vector<PropertyResult> out;
  for (const auto& t : triples) {
    out.push_back({"theorem_bound " + problem.name + " M=" + std::to_string(t.M),
                   t.h1_error <= t.bound,
                   "h1_error=" + format_csv(t.h1_error) + " bound=" + format_csv(t.bound)});
  }
  return out;
}

std::vector<PropertyResult> check_m1_equivalence(const Problem<double>& problem, Index N) {
  const auto quad = gauss_legendre<double>(3);
  const auto a = solve_original(problem, N, 1, quad);
  const auto b = solve_improved(problem, N, 1, quad);
  const double diff = (a.U_M.values() - b.U_M.values()).cwiseAbs().maxCoeff();
  return {{"m1_equivalence " + problem.name + " N=" + std::to_string(N), diff <= 1e-12,
           "max nodal difference " + format_csv(diff)}};
}

std::vector<PropertyResult> check_factorial_decay(const Problem<double>& problem, Index N,
                                                  int max_j) {
  const auto quad = gauss_legendre<double>(3);
  const auto result = solve_original(problem, N, max_j, quad);
  const double psi_sup = sup_norm(psi_of(problem.kappa), problem.length, kPsiSupSamples);
  const auto zero = constant_field(0.0);
  const auto eval_quad = gauss_legendre<double>(2);
  const double u0_h1 = h1_seminorm_error(result.u0, zero, eval_quad);
  std::vector<PropertyResult> out;
  double factor = 1;
  for (int j = 1; j <= max_j; ++j) {
    factor *= psi_sup / j;
    const double uj = h1_seminorm_error((*result.terms)[j - 1], zero, eval_quad);
    const double bound = 1.05 * factor * u0_h1;
    out.push_back({"factorial_decay " + problem.name + " j=" + std::to_string(j), uj <= bound,
                   "|u_j|_H1=" + format_csv(uj) + " bound=" + format_csv(bound)});
  }
  return out;
}

double fitted_order(const std::vector<double>& h, const std::vector<double>& errors) {
  const auto n = static_cast<double>(h.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<PropertyResult> check_convergence_order(const Problem<double>& problem) {
  if (!problem.exact) throw InvalidArgument("convergence check needs a reference solution");
  const auto quad = gauss_legendre<double>(3);
  const auto eval_quad = gauss_legendre<double>(5);
  std::vector<double> hs, errs;
  for (int k = 5; k <= 11; ++k) {
    const Index N = Index(1) << k;
    const auto u = fem_solve(problem, N, quad);
    hs.push_back(u.mesh().h());
    errs.push_back(l2_error(u, *problem.exact, eval_quad));
  }
  const double order = fitted_order(hs, errs);
  return {{"convergence_order " + problem.name, order >= 1.9 && order <= 2.1,
           fmt("fitted L2 order %.4f over N=2^5..2^11", order)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tail",        "theorem", "equivalence", "decay",
                                              "convergence", "all"};
  return names;
}

std::vector<PropertyResult> run_suite(const std::string& suite, const Problem<double>& problem,
                                      const std::vector<int>& orders) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  std::vector<PropertyResult> out;
  auto append = [&](std::vector<PropertyResult> more) {
    out.insert(out.end(), more.begin(), more.end());
  };
  const bool all = suite == "all";
  if (all || suite == "tail") append(check_tail_bound());
  if (all || suite == "theorem") append(check_theorem_bound(problem, orders));
  if (all || suite == "equivalence") append(check_m1_equivalence(problem));
  if (all || suite == "decay") append(check_factorial_decay(problem));
  if (all || suite == "convergence") append(check_convergence_order(problem));
  return out;
}

}  // namespace decomp1d
