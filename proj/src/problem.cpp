#include "decomp1d/problem.hpp"

#include <cmath>
#include <numbers>

namespace decomp1d {

namespace {

using F = ScalarField<double>;
constexpr double pi = std::numbers::pi;

// Tolerance of the quadrature-backed reference attached to ex4.
constexpr double kEx4ReferenceTol = 1e-11;

Problem<double> example1() {
  F kappa([](double x) { return 1.0 + x * x; }, "1+x^2");
  F f([](double) { return 1.0; }, "1");
  F u([](double x) { return std::atan(x) - 0.5 * std::log1p(x * x); }, "atan(x)-log(1+x^2)/2");
  F du([](double x) { return (1.0 - x) / (1.0 + x * x); }, "(1-x)/(1+x^2)");
  return make_problem<double>("ex1", 1.0, kappa, f, 0.0, 0.0, u, du);
}

Problem<double> example2() {
  F kappa([](double x) { return 1.0 / (1.0 - 0.5 * std::sin(10.0 * pi * x)); },
          "1/(1-sin(10 pi x)/2)");
  F f([](double) { return 1.0; }, "1");
  // The constant is -1/(20 pi); that is what u(0) = 0 requires.
  F u(
      [](double x) {
        const double a = 10.0 * pi * x;
        return (std::sin(a) + 10.0 * pi * (1.0 - x) * std::cos(a) + 100.0 * pi * pi * x * (2.0 - x)) /
                   (200.0 * pi * pi) -
               1.0 / (20.0 * pi);
      },
      "ex2 closed form");
  F du([](double x) { return (1.0 - x) * (1.0 - 0.5 * std::sin(10.0 * pi * x)); },
       "(1-x)(1-sin(10 pi x)/2)");
  return make_problem<double>("ex2", 1.0, kappa, f, 0.0, 0.0, u, du);
}

Problem<double> example3() {
  F kappa([](double x) { return (x + 1.0) * (x + 1.0); }, "(x+1)^2");
  F f([](double x) { return x / (x + 1.0); }, "x/(x+1)");
  F u(
      [](double x) {
        return ((3.0 - std::log(2.0)) * x - (2.0 + x) * std::log1p(x)) / (1.0 + x);
      },
      "ex3 closed form");
  F du(
      [](double x) {
        return (1.0 - std::log(2.0) - x + std::log1p(x)) / ((1.0 + x) * (1.0 + x));
      },
      "ex3 derivative");
  return make_problem<double>("ex3", 1.0, kappa, f, 0.0, 0.0, u, du);
}

Problem<double> example4() {
  F kappa([](double x) { return x * x * x * x + std::exp(-x); }, "x^4+exp(-x)");
  F f([](double x) { return -2.0 * std::cos(pi * x); }, "-2cos(pi x)");
  auto bare = make_problem<double>("ex4", 1.0, kappa, f, 0.0, 0.0);
  auto u = exact_solution_via_flux(bare, kEx4ReferenceTol);
  F du([kappa](double x) { return 2.0 * std::sin(pi * x) / (pi * kappa(x)); },
       "2 sin(pi x)/(pi kappa)");
  auto p = make_problem<double>("ex4", 1.0, kappa, f, 0.0, 0.0, u, du);
  p.closed_form = false;
  return p;
}

}  // namespace

const std::vector<std::string>& builtin_problem_ids() {
  static const std::vector<std::string> ids{"ex1", "ex2", "ex3", "ex4"};
  return ids;
}

Problem<double> builtin_problem(std::string_view id) {
  if (id == "ex1") return example1();
  if (id == "ex2") return example2();
  if (id == "ex3") return example3();
  if (id == "ex4") return example4();
  std::string valid;
  for (const auto& name : builtin_problem_ids()) valid += (valid.empty() ? "" : ", ") + name;
  throw InvalidArgument("unknown problem id '" + std::string(id) + "' (valid: " + valid + ")");
}

}  // namespace decomp1d
