#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "decomp1d/decomposition.hpp"
#include "decomp1d/errors.hpp"
#include "decomp1d/field.hpp"
#include "decomp1d/mesh.hpp"
#include "decomp1d/problem.hpp"
#include "decomp1d/quadrature.hpp"

namespace decomp1d {

enum class Reference { ClosedForm, FluxOracle, FineGrid };

std::string_view reference_name(Reference r);

struct ErrorReport {
  std::string problem;
  Method method = Method::Improved;
  Index N = 0;
  int M = 0;
  double l2_error = 0;
  double h1_error = 0;
  Reference reference = Reference::ClosedForm;

  /// Throws Error on a negative or NaN norm.
  void validate() const;
};

/// ||approx - reference||_L2 by per-element Gauss quadrature.
template <typename Scalar>
Scalar l2_error(const NodalFunction<Scalar>& approx, const ScalarField<Scalar>& reference,
                const GaussRule<Scalar>& quad) {
  const auto& mesh = approx.mesh();
  const Scalar h = mesh.h();
  Scalar sum = 0;
  for (Index e = 0; e < mesh.n_elems(); ++e) {
    const Scalar a = approx.value(e);
    const Scalar b = approx.value(e + 1);
    Scalar local = 0;
    for (int q = 0; q < quad.n_points; ++q) {
      const Scalar t = quad.points[q];
      const Scalar d = a * (1 - t) + b * t - reference(mesh.node(e) + h * t);
      local += quad.weights[q] * d * d;
    }
    sum += h * local;
  }
  using std::sqrt;
  return sqrt(sum);
}

/// |approx - reference|_H1, with approx' the piecewise-constant derivative.
template <typename Scalar>
Scalar h1_seminorm_error(const NodalFunction<Scalar>& approx,
                         const ScalarField<Scalar>& reference_derivative,
                         const GaussRule<Scalar>& quad) {
  const auto& mesh = approx.mesh();
  const Scalar h = mesh.h();
  Scalar sum = 0;
  for (Index e = 0; e < mesh.n_elems(); ++e) {
    const Scalar s = approx.slope(e);
    Scalar local = 0;
    for (int q = 0; q < quad.n_points; ++q) {
      const Scalar d = s - reference_derivative(mesh.node(e) + h * quad.points[q]);
      local += quad.weights[q] * d * d;
    }
    sum += h * local;
  }
  using std::sqrt;
  return sqrt(sum);
}

namespace detail {

template <typename Scalar>
void require_nested(const Mesh<Scalar>& coarse, const Mesh<Scalar>& fine) {
  if (coarse.length() != fine.length() || fine.n_elems() % coarse.n_elems() != 0) {
    throw InvalidArgument("fine-grid reference must refine the coarse mesh");
  }
}

}  // namespace detail

/// L2 distance between a coarse function and a fine-grid reference on a nested mesh.
/// Both are linear on every fine element, so the integral is taken there.
template <typename Scalar>
Scalar l2_error(const NodalFunction<Scalar>& coarse, const NodalFunction<Scalar>& fine,
                const GaussRule<Scalar>& quad) {
  detail::require_nested(coarse.mesh(), fine.mesh());
  const auto& mesh = fine.mesh();
  const Scalar h = mesh.h();
  Scalar sum = 0;
  for (Index e = 0; e < mesh.n_elems(); ++e) {
    Scalar local = 0;
    for (int q = 0; q < quad.n_points; ++q) {
      const Scalar t = quad.points[q];
      const Scalar x = mesh.node(e) + h * t;
      const Scalar d = coarse(x) - (fine.value(e) * (1 - t) + fine.value(e + 1) * t);
      local += quad.weights[q] * d * d;
    }
    sum += h * local;
  }
  using std::sqrt;
  return sqrt(sum);
}

template <typename Scalar>
Scalar h1_seminorm_error(const NodalFunction<Scalar>& coarse, const NodalFunction<Scalar>& fine) {
  detail::require_nested(coarse.mesh(), fine.mesh());
  const auto& mesh = fine.mesh();
  const Index ratio = mesh.n_elems() / coarse.mesh().n_elems();
  Scalar sum = 0;
  for (Index e = 0; e < mesh.n_elems(); ++e) {
    const Scalar d = coarse.slope(e / ratio) - fine.slope(e);
    sum += mesh.h() * d * d;
  }
  using std::sqrt;
  return sqrt(sum);
}

/// max |field| over equispaced samples including both endpoints. This is a lower
/// estimate of the true supremum.
template <typename Scalar>
Scalar sup_norm(const ScalarField<Scalar>& field, Scalar length, int n_samples) {
  if (n_samples < 2) throw InvalidArgument("sup_norm needs at least two samples");
  Scalar best = 0;
  using std::abs;
  for (int i = 0; i < n_samples; ++i) {
    const Scalar x = length * Scalar(i) / Scalar(n_samples - 1);
    best = std::max(best, abs(field(x)));
  }
  return best;
}

/// x^{M+1} / (M+1)! * exp(x), the bound on the exponential tail past order M.
template <typename Scalar>
Scalar tail_bound(Scalar psi_sup, int M) {
  if (psi_sup < 0 || M < 0) throw InvalidArgument("tail_bound needs psi_sup >= 0 and M >= 0");
  Scalar t = 1;
  for (int j = 1; j <= M + 1; ++j) t *= psi_sup / Scalar(j);
  using std::exp;
  return t * exp(psi_sup);
}

struct BoundTriple {
  int M = 0;
  double h1_error = 0;
  double bound = 0;
};

class BoundViolation : public Error {
 public:
  BoundViolation(std::vector<BoundTriple> triples, const std::string& what)
      : Error(what), triples_(std::move(triples)) {}
  const std::vector<BoundTriple>& triples() const noexcept { return triples_; }

 private:
  std::vector<BoundTriple> triples_;
};

/// Number of samples used for the sup-norm of psi.
inline constexpr int kPsiSupSamples = 65536;

/// Continuous |u - U_M|_H1 = ||(1/kappa - G_M) u0'|| for each M, against
/// tail_bound(||psi||_inf, M) * |u0|_H1. Throws BoundViolation if any error
/// exceeds its bound.
template <typename Scalar>
std::vector<BoundTriple> theorem_bound_check(const Problem<Scalar>& problem,
                                             const std::vector<int>& orders, double tol) {
  const auto flux = flux_field(problem, tol / 10);
  const auto psi = psi_of(problem.kappa);
  const Scalar psi_sup = sup_norm(psi, problem.length, kPsiSupSamples);
  // Squared norms: tol applies to the norm, so the integrals get tol^2.
  AdaptiveOptions opts;
  opts.abs_tol = tol * tol;
  opts.rel_tol = 1e-12;
  using std::sqrt;
  const Scalar u0_h1 = sqrt(integrate_adaptive<Scalar>(
      [&](Scalar x) {
        const Scalar F = flux(x);
        return F * F;
      },
      Scalar(0), problem.length, opts));

  std::vector<BoundTriple> out;
  bool violated = false;
  for (int M : orders) {
    if (M < 1) throw InvalidArgument("theorem bound check needs M >= 1");
    const Scalar err2 = integrate_adaptive<Scalar>(
        [&](Scalar x) {
          const Scalar p = psi(x);
          using std::exp;
          const Scalar d = (exp(-p) - truncated_exp_neg(p, M)) * flux(x);
          return d * d;
        },
        Scalar(0), problem.length, opts);
    const double err = double(sqrt(std::max(err2, Scalar(0))));
    const double bound = double(tail_bound(psi_sup, M) * u0_h1);
    out.push_back({M, err, bound});
    if (!(err <= bound)) violated = true;
  }
  if (violated) {
    std::string msg = "theorem bound violated for " + problem.name + ":";
    for (const auto& t : out) {
      if (!(t.h1_error <= t.bound)) {
        msg += " M=" + std::to_string(t.M) + " error=" + std::to_string(t.h1_error) +
               " bound=" + std::to_string(t.bound);
      }
    }
    throw BoundViolation(out, msg);
  }
  return out;
}

template <typename Scalar>
std::vector<BoundTriple> theorem_bound_check(const Problem<Scalar>& problem, int M_max,
                                             double tol) {
  if (M_max < 1) throw InvalidArgument("theorem bound check needs M_max >= 1");
  std::vector<int> orders;
  for (int M = 1; M <= M_max; ++M) orders.push_back(M);
  return theorem_bound_check(problem, orders, tol);
}

}  // namespace decomp1d
