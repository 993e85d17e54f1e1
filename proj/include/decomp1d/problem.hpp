#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "decomp1d/errors.hpp"
#include "decomp1d/field.hpp"
#include "decomp1d/quadrature.hpp"

namespace decomp1d {

/// Number of equispaced samples used to certify positivity of kappa.
inline constexpr int kKappaSamples = 65536;

/// -(kappa u')' = f on (0, L), u(0) = alpha, -kappa(L) u'(L) = beta.
template <typename Scalar>
struct Problem {
  std::string name;
  Scalar length{1};
  ScalarField<Scalar> kappa;
  ScalarField<Scalar> f;
  Scalar alpha{0};
  Scalar beta{0};
  std::optional<ScalarField<Scalar>> exact;
  std::optional<ScalarField<Scalar>> exact_derivative;
  /// Smallest sampled kappa, recorded at construction.
  Scalar kappa_min{0};
  /// True when `exact` is a formula rather than a quadrature-backed reference.
  bool closed_form = false;
};

/// Builds a problem and checks it: kappa positive and finite on the sample grid,
/// and an attached exact solution consistent with both boundary conditions.
template <typename Scalar>
Problem<Scalar> make_problem(std::string name, Scalar length, ScalarField<Scalar> kappa,
                             ScalarField<Scalar> f, Scalar alpha, Scalar beta,
                             std::optional<ScalarField<Scalar>> exact = std::nullopt,
                             std::optional<ScalarField<Scalar>> exact_derivative = std::nullopt) {
  if (!(length > 0)) throw InvalidArgument("problem '" + name + "': length must be positive");
  Problem<Scalar> p{std::move(name), length, std::move(kappa), std::move(f), alpha, beta,
                    std::move(exact), std::move(exact_derivative), Scalar(0), false};
  p.closed_form = p.exact.has_value();
  Scalar kmin = std::numeric_limits<Scalar>::infinity();
  for (int i = 0; i < kKappaSamples; ++i) {
    const Scalar x = length * Scalar(i) / Scalar(kKappaSamples - 1);
    const Scalar k = p.kappa(x);
    if (!std::isfinite(double(k)) || !(k > 0)) {
      throw InvalidArgument("problem '" + p.name + "': kappa not positive at x = " +
                            std::to_string(double(x)));
    }
    kmin = std::min(kmin, k);
  }
  p.kappa_min = kmin;
  using std::abs;
  if (p.exact && abs((*p.exact)(Scalar(0)) - alpha) > Scalar(1e-10)) {
    throw InvalidArgument("problem '" + p.name + "': exact solution violates u(0) = alpha");
  }
  if (p.exact_derivative &&
      abs(-p.kappa(length) * (*p.exact_derivative)(length) - beta) > Scalar(1e-8)) {
    throw InvalidArgument("problem '" + p.name + "': exact solution violates the flux condition");
  }
  return p;
}

/// psi = log(kappa), evaluated pointwise.
template <typename Scalar>
ScalarField<Scalar> psi_of(const ScalarField<Scalar>& kappa) {
  return ScalarField<Scalar>(
      [kappa](Scalar x) {
        const Scalar k = kappa(x);
        if (!(k > 0)) {
          throw DomainError("log of non-positive coefficient at x = " + std::to_string(double(x)));
        }
        using std::log;
        return log(k);
      },
      "log(" + kappa.description() + ")");
}

/// Partial sum sum_{j=0}^{M} (-psi)^j / j!, by term recursion.
template <typename Scalar>
Scalar truncated_exp_neg(Scalar psi, int M) {
  Scalar term = 1;
  Scalar sum = 1;
  for (int j = 1; j <= M; ++j) {
    term *= -psi / Scalar(j);
    sum += term;
  }
  return sum;
}

template <typename Scalar>
ScalarField<Scalar> g_m(const ScalarField<Scalar>& psi, int M) {
  if (M < 0) throw InvalidArgument("truncation order must be nonnegative");
  return ScalarField<Scalar>([psi, M](Scalar x) { return truncated_exp_neg(psi(x), M); },
                             "G_" + std::to_string(M) + "[" + psi.description() + "]");
}

/// F(x) = -beta + int_x^L f, the flux kappa u' of the exact solution.
template <typename Scalar>
ScalarField<Scalar> flux_field(const Problem<Scalar>& problem, double tol) {
  auto f = problem.f;
  auto cum = std::make_shared<const CumulativeIntegral<Scalar, ScalarField<Scalar>>>(
      f, problem.length, tol);
  const Scalar beta = problem.beta;
  return ScalarField<Scalar>([cum, beta](Scalar x) { return -beta + (cum->total() - (*cum)(x)); },
                             "flux of " + problem.name);
}

/// u(x) = alpha + int_0^x F(s) / kappa(s) ds by nested adaptive quadrature.
///
/// The inner flux is resolved to tol / 10, the outer integral to tol.
template <typename Scalar>
ScalarField<Scalar> exact_solution_via_flux(const Problem<Scalar>& problem, double tol) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  auto flux = flux_field(problem, tol / 10);
  auto kappa = problem.kappa;
  auto integrand = ScalarField<Scalar>([flux, kappa](Scalar s) { return flux(s) / kappa(s); },
                                       "flux/kappa");
  auto cum = std::make_shared<const CumulativeIntegral<Scalar, ScalarField<Scalar>>>(
      integrand, problem.length, tol);
  const Scalar alpha = problem.alpha;
  return ScalarField<Scalar>([cum, alpha](Scalar x) { return alpha + (*cum)(x); },
                             "flux-oracle solution of " + problem.name);
}

/// Built-in problem ids: ex1, ex2, ex3, ex4.
Problem<double> builtin_problem(std::string_view id);
const std::vector<std::string>& builtin_problem_ids();

}  // namespace decomp1d
