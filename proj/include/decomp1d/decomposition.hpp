#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "decomp1d/errors.hpp"
#include "decomp1d/fem.hpp"
#include "decomp1d/field.hpp"
#include "decomp1d/mesh.hpp"
#include "decomp1d/problem.hpp"
#include "decomp1d/quadrature.hpp"

namespace decomp1d {

enum class Method { Original, Improved, DirectFEM };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

struct MethodConfig {
  Method method = Method::Improved;
  int M = 1;
  Index N = 1;
  int quad_points = 3;

  /// Throws InvalidArgument unless M >= 0, N >= 1, and M >= 1 for the decomposition methods.
  void validate() const;
};

template <typename Scalar>
struct DecompositionResult {
  NodalFunction<Scalar> u0;
  /// u_1 ... u_M; Original method only.
  std::optional<std::vector<NodalFunction<Scalar>>> terms;
  NodalFunction<Scalar> U_M;
  /// Back-substitutions against a factorized matrix.
  int solve_count = 0;
  /// Weighted-gradient right-hand-side assemblies.
  int assembly_count = 0;
  int factorization_count = 0;
  std::chrono::nanoseconds wall_time{0};
};

namespace detail {

/// The kappa = 1 stiffness matrix with a Dirichlet row at x = 0, factorized once.
template <typename Scalar>
class LaplaceSolver {
 public:
  LaplaceSolver(const Mesh<Scalar>& mesh, const GaussRule<Scalar>& quad)
      : mesh_(mesh),
        stiffness_(assemble_stiffness(mesh, constant_field<Scalar>(Scalar(1)), quad)),
        solver_(apply_dirichlet(stiffness_, Scalar(0))) {}

  NodalFunction<Scalar> solve(Vector<Scalar> rhs, Scalar dirichlet) {
    TridiagonalSystem<Scalar> sys = stiffness_;
    sys.rhs = std::move(rhs);
    sys = apply_dirichlet(std::move(sys), dirichlet);
    ++back_substitutions;
    return {mesh_, solver_.solve(sys.rhs)};
  }

  int back_substitutions = 0;

 private:
  Mesh<Scalar> mesh_;
  TridiagonalSystem<Scalar> stiffness_;
  ThomasSolver<Scalar> solver_;
};

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sample_at_points(
    const Mesh<Scalar>& mesh, const GaussRule<Scalar>& quad, const ScalarField<Scalar>& field) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(mesh.n_elems(), quad.n_points);
  for (Index e = 0; e < mesh.n_elems(); ++e) {
    for (int q = 0; q < quad.n_points; ++q) {
      out(e, q) = field(mesh.node(e) + mesh.h() * quad.points[q]);
    }
  }
  return out;
}

}  // namespace detail

/// Galerkin solution of -u0'' = f with u0(0) = alpha, -u0'(L) = beta.
template <typename Scalar>
NodalFunction<Scalar> solve_u0(const Problem<Scalar>& problem, Index n_elems,
                               const GaussRule<Scalar>& quad) {
  const auto mesh = build_mesh(problem.length, n_elems);
  detail::LaplaceSolver<Scalar> laplace(mesh, quad);
  return laplace.solve(assemble_load(mesh, problem.f, quad, problem.beta), problem.alpha);
}

/// The recursive method: u_m solves a_0(u_m, v) = -sum_{j=1}^{m} a_j(u_{m-j}, v), u_m(0) = 0.
///
/// All M + 1 systems share one factorized kappa = 1 matrix. The flux conditions
/// of the subproblems are natural and need no boundary assembly.
template <typename Scalar>
DecompositionResult<Scalar> solve_original(const Problem<Scalar>& problem, Index n_elems, int M,
                                           const GaussRule<Scalar>& quad) {
  if (M < 0) throw InvalidArgument("truncation order must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  const auto mesh = build_mesh(problem.length, n_elems);
  detail::LaplaceSolver<Scalar> laplace(mesh, quad);

  auto u0 = laplace.solve(assemble_load(mesh, problem.f, quad, problem.beta), problem.alpha);
  const auto psi = detail::sample_at_points(mesh, quad, psi_of(problem.kappa));

  // slopes.col(k) holds the element derivatives of u_k.
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> slopes(mesh.n_elems(), M + 1);
  slopes.col(0) = u0.slopes();
  std::vector<NodalFunction<Scalar>> terms;
  terms.reserve(M);
  Vector<Scalar> total = u0.values();
  int assemblies = 0;

  for (int m = 1; m <= M; ++m) {
    auto rhs = assemble_flux_load(mesh, quad, [&](Index e, int q, Scalar) {
      // -sum_{j=1}^{m} psi^j / j! * u_{m-j}'
      const Scalar p = psi(e, q);
      Scalar weight = 1;
      Scalar flux = 0;
      for (int j = 1; j <= m; ++j) {
        weight *= p / Scalar(j);
        flux += weight * slopes(e, m - j);
      }
      return -flux;
    });
    ++assemblies;
    auto um = laplace.solve(std::move(rhs), Scalar(0));
    slopes.col(m) = um.slopes();
    total += um.values();
    terms.push_back(std::move(um));
  }

  DecompositionResult<Scalar> result{std::move(u0), std::move(terms), {mesh, std::move(total)}};
  result.solve_count = laplace.back_substitutions;
  result.assembly_count = assemblies;
  result.factorization_count = 1;
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

/// The two-solve method: u0 as above, then (U_M', v') = (G_M u0', v') with U_M(0) = alpha.
template <typename Scalar>
DecompositionResult<Scalar> solve_improved(const Problem<Scalar>& problem, Index n_elems, int M,
                                           const GaussRule<Scalar>& quad) {
  if (M < 0) throw InvalidArgument("truncation order must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  const auto mesh = build_mesh(problem.length, n_elems);
  detail::LaplaceSolver<Scalar> laplace(mesh, quad);

  auto u0 = laplace.solve(assemble_load(mesh, problem.f, quad, problem.beta), problem.alpha);
  const auto psi = psi_of(problem.kappa);
  const Vector<Scalar> s0 = u0.slopes();
  auto rhs = assemble_flux_load(mesh, quad, [&](Index e, int, Scalar x) {
    return truncated_exp_neg(psi(x), M) * s0[e];
  });
  auto U = laplace.solve(std::move(rhs), problem.alpha);

  DecompositionResult<Scalar> result{std::move(u0), std::nullopt, std::move(U)};
  result.solve_count = laplace.back_substitutions;
  result.assembly_count = 1;
  result.factorization_count = 1;
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

/// Direct solve wrapped in the common result type; u0 and U_M are the same function.
template <typename Scalar>
DecompositionResult<Scalar> solve_direct(const Problem<Scalar>& problem, Index n_elems,
                                         const GaussRule<Scalar>& quad) {
  const auto start = std::chrono::steady_clock::now();
  auto u = fem_solve(problem, n_elems, quad);
  DecompositionResult<Scalar> result{u, std::nullopt, u};
  result.solve_count = 1;
  result.assembly_count = 0;
  result.factorization_count = 1;
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

template <typename Scalar>
DecompositionResult<Scalar> run_method(const Problem<Scalar>& problem, const MethodConfig& config) {
  config.validate();
  const auto quad = gauss_legendre<Scalar>(config.quad_points);
  switch (config.method) {
    case Method::Original: return solve_original(problem, config.N, config.M, quad);
    case Method::Improved: return solve_improved(problem, config.N, config.M, quad);
    case Method::DirectFEM: return solve_direct(problem, config.N, quad);
  }
  throw InvalidArgument("unknown method");
}

/// u_j' = (-psi)^j / j! * u0'.
template <typename Scalar>
ScalarField<Scalar> term_gradient(int j, const ScalarField<Scalar>& psi,
                                  const ScalarField<Scalar>& u0_prime) {
  if (j < 0) throw InvalidArgument("term index must be nonnegative");
  if (j == 0) return u0_prime;
  return ScalarField<Scalar>(
      [j, psi, u0_prime](Scalar x) {
        const Scalar p = psi(x);
        Scalar c = 1;
        for (int i = 1; i <= j; ++i) c *= -p / Scalar(i);
        return c * u0_prime(x);
      },
      "term gradient " + std::to_string(j));
}

/// Mesh-free U_M(x) = alpha + int_0^x G_M(s) u0'(s) ds, with u0' = -beta + int_s^L f.
template <typename Scalar>
ScalarField<Scalar> semi_analytic_U_M(const Problem<Scalar>& problem, int M, double tol) {
  if (M < 0) throw InvalidArgument("truncation order must be nonnegative");
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  auto flux = flux_field(problem, tol / 10);
  auto g = g_m(psi_of(problem.kappa), M);
  auto integrand = ScalarField<Scalar>([flux, g](Scalar s) { return g(s) * flux(s); }, "G_M u0'");
  auto cum = std::make_shared<const CumulativeIntegral<Scalar, ScalarField<Scalar>>>(
      integrand, problem.length, tol);
  const Scalar alpha = problem.alpha;
  return ScalarField<Scalar>([cum, alpha](Scalar x) { return alpha + (*cum)(x); },
                             "semi-analytic U_" + std::to_string(M) + " of " + problem.name);
}

}  // namespace decomp1d
