#pragma once

#include <cmath>
#include <string>

#include "decomp1d/errors.hpp"
#include "decomp1d/field.hpp"
#include "decomp1d/mesh.hpp"
#include "decomp1d/problem.hpp"
#include "decomp1d/quadrature.hpp"

namespace decomp1d {

/// Tridiagonal matrix plus right-hand side.
///
/// `sub[i]` couples row i+1 to column i, `super[i]` couples row i to column i+1.
template <typename Scalar>
struct TridiagonalSystem {
  Vector<Scalar> sub;
  Vector<Scalar> diag;
  Vector<Scalar> super;
  Vector<Scalar> rhs;

  Index size() const noexcept { return diag.size(); }

  Vector<Scalar> multiply(const Vector<Scalar>& x) const {
    const Index n = size();
    Vector<Scalar> y = diag.cwiseProduct(x);
    y.head(n - 1) += super.cwiseProduct(x.tail(n - 1));
    y.tail(n - 1) += sub.cwiseProduct(x.head(n - 1));
    return y;
  }

  Vector<Scalar> residual(const Vector<Scalar>& x) const { return multiply(x) - rhs; }
};

namespace detail {

template <typename Scalar>
bool finite(Scalar v) {
  using std::isfinite;
  return isfinite(v);
}

}  // namespace detail

/// Stiffness matrix of a(u, v) = int coeff u' v' over hat functions.
template <typename Scalar>
TridiagonalSystem<Scalar> assemble_stiffness(const Mesh<Scalar>& mesh,
                                             const ScalarField<Scalar>& coeff,
                                             const GaussRule<Scalar>& quad) {
  const Index n = mesh.n_elems();
  const Scalar h = mesh.h();
  TridiagonalSystem<Scalar> sys{Vector<Scalar>::Zero(n), Vector<Scalar>::Zero(n + 1),
                                Vector<Scalar>::Zero(n), Vector<Scalar>::Zero(n + 1)};
  for (Index e = 0; e < n; ++e) {
    Scalar avg = 0;
    for (int q = 0; q < quad.n_points; ++q) {
      const Scalar k = coeff(mesh.node(e) + h * quad.points[q]);
      if (!detail::finite(k)) throw AssemblyError("non-finite coefficient in stiffness assembly", e);
      avg += quad.weights[q] * k;
    }
    const Scalar ke = avg / h;
    sys.diag[e] += ke;
    sys.diag[e + 1] += ke;
    sys.sub[e] -= ke;
    sys.super[e] -= ke;
  }
  return sys;
}

/// Load vector int f phi_i, with -beta added to the last entry.
template <typename Scalar>
Vector<Scalar> assemble_load(const Mesh<Scalar>& mesh, const ScalarField<Scalar>& f,
                             const GaussRule<Scalar>& quad, Scalar beta) {
  const Index n = mesh.n_elems();
  const Scalar h = mesh.h();
  Vector<Scalar> b = Vector<Scalar>::Zero(n + 1);
  for (Index e = 0; e < n; ++e) {
    Scalar left = 0;
    Scalar right = 0;
    for (int q = 0; q < quad.n_points; ++q) {
      const Scalar xi = quad.points[q];
      const Scalar fx = f(mesh.node(e) + h * xi);
      if (!detail::finite(fx)) throw AssemblyError("non-finite load", e);
      left += quad.weights[q] * fx * (1 - xi);
      right += quad.weights[q] * fx * xi;
    }
    b[e] += h * left;
    b[e + 1] += h * right;
  }
  b[n] -= beta;
  return b;
}

/// Entry i is int flux(x) phi_i'(x) dx, where `flux(e, x)` gives the flux at a
/// quadrature point x of element e. The hat gradients are -1/h and +1/h on
/// element e, so the element integral reduces to the quadrature mean of the flux.
template <typename Scalar, typename Flux>
Vector<Scalar> assemble_flux_load(const Mesh<Scalar>& mesh, const GaussRule<Scalar>& quad,
                                  Flux&& flux) {
  const Index n = mesh.n_elems();
  const Scalar h = mesh.h();
  Vector<Scalar> b = Vector<Scalar>::Zero(n + 1);
  for (Index e = 0; e < n; ++e) {
    Scalar mean = 0;
    for (int q = 0; q < quad.n_points; ++q) {
      mean += quad.weights[q] * flux(e, q, mesh.node(e) + h * quad.points[q]);
    }
    b[e] -= mean;
    b[e + 1] += mean;
  }
  return b;
}

/// Entry i is int weight w' phi_i' with w' the exact piecewise-constant derivative.
template <typename Scalar>
Vector<Scalar> assemble_gradient_load(const Mesh<Scalar>& mesh, const ScalarField<Scalar>& weight,
                                      const NodalFunction<Scalar>& w,
                                      const GaussRule<Scalar>& quad) {
  if (!(w.mesh() == mesh)) throw InvalidArgument("gradient load: function lives on another mesh");
  const Vector<Scalar> slopes = w.slopes();
  return assemble_flux_load(mesh, quad, [&](Index e, int, Scalar x) {
    const Scalar wx = weight(x);
    if (!detail::finite(wx)) throw AssemblyError("non-finite weight in gradient load", e);
    return wx * slopes[e];
  });
}

/// Replaces row 0 by u(0) = alpha and moves the node-0 coupling of row 1 into rhs[1].
template <typename Scalar>
TridiagonalSystem<Scalar> apply_dirichlet(TridiagonalSystem<Scalar> sys, Scalar alpha) {
  if (sys.size() > 1) {
    sys.rhs[1] -= sys.sub[0] * alpha;
    sys.sub[0] = 0;
    sys.super[0] = 0;
  }
  sys.diag[0] = 1;
  sys.rhs[0] = alpha;
  return sys;
}

/// Thomas algorithm, split into a one-time factorization and repeated back-substitutions.
template <typename Scalar>
class ThomasSolver {
 public:
  explicit ThomasSolver(const TridiagonalSystem<Scalar>& sys) : sub_(sys.sub) {
    const Index n = sys.size();
    pivots_.resize(n);
    upper_.resize(n > 0 ? n - 1 : 0);
    for (Index i = 0; i < n; ++i) {
      Scalar p = sys.diag[i];
      if (i > 0) p -= sys.sub[i - 1] * upper_[i - 1];
      if (p == Scalar(0) || !detail::finite(p)) throw SingularSystemError(i);
      pivots_[i] = p;
      if (i + 1 < n) upper_[i] = sys.super[i] / p;
    }
  }

  Vector<Scalar> solve(const Vector<Scalar>& rhs) const {
    const Index n = pivots_.size();
    if (rhs.size() != n) throw InvalidArgument("right-hand side has the wrong length");
    Vector<Scalar> x(n);
    x[0] = rhs[0] / pivots_[0];
    for (Index i = 1; i < n; ++i) x[i] = (rhs[i] - sub_[i - 1] * x[i - 1]) / pivots_[i];
    for (Index i = n - 2; i >= 0; --i) x[i] -= upper_[i] * x[i + 1];
    return x;
  }

  const Vector<Scalar>& pivots() const noexcept { return pivots_; }

 private:
  Vector<Scalar> sub_;
  Vector<Scalar> pivots_;
  Vector<Scalar> upper_;
};

template <typename Scalar>
NodalFunction<Scalar> solve_tridiagonal(const Mesh<Scalar>& mesh,
                                        const TridiagonalSystem<Scalar>& sys) {
  if (sys.size() != mesh.n_nodes()) throw InvalidArgument("system size does not match the mesh");
  return {mesh, ThomasSolver<Scalar>(sys).solve(sys.rhs)};
}

/// Direct Galerkin solution of the full variable-coefficient problem.
template <typename Scalar>
NodalFunction<Scalar> fem_solve(const Problem<Scalar>& problem, Index n_elems,
                                const GaussRule<Scalar>& quad) {
  const auto mesh = build_mesh(problem.length, n_elems);
  auto sys = assemble_stiffness(mesh, problem.kappa, quad);
  sys.rhs = assemble_load(mesh, problem.f, quad, problem.beta);
  return solve_tridiagonal(mesh, apply_dirichlet(std::move(sys), problem.alpha));
}

}  // namespace decomp1d
