#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "decomp1d/errors.hpp"
#include "decomp1d/field.hpp"

namespace decomp1d {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

/// Uniform partition of [0, L] into N elements.
template <typename Scalar>
class Mesh {
 public:
  Mesh(Scalar length, Index n_elems) : length_(length), n_elems_(n_elems) {
    if (!(length > 0) || !std::isfinite(double(length))) {
      throw InvalidArgument("mesh length must be positive and finite");
    }
    if (n_elems < 1) throw InvalidArgument("mesh needs at least one element");
    h_ = length_ / Scalar(n_elems_);
    nodes_.resize(n_elems_ + 1);
    for (Index i = 0; i <= n_elems_; ++i) nodes_[i] = Scalar(i) * length_ / Scalar(n_elems_);
    nodes_[n_elems_] = length_;
  }

  Scalar length() const noexcept { return length_; }
  Index n_elems() const noexcept { return n_elems_; }
  Index n_nodes() const noexcept { return n_elems_ + 1; }
  Scalar h() const noexcept { return h_; }
  const Vector<Scalar>& nodes() const noexcept { return nodes_; }
  Scalar node(Index i) const { return nodes_[i]; }

  /// Element containing x; the right endpoint belongs to the last element.
  Index locate(Scalar x) const {
    using std::floor;
    auto e = static_cast<Index>(floor(x / h_));
    return std::clamp<Index>(e, 0, n_elems_ - 1);
  }

  friend bool operator==(const Mesh& a, const Mesh& b) {
    return a.n_elems_ == b.n_elems_ && a.length_ == b.length_;
  }

 private:
  Scalar length_;
  Index n_elems_;
  Scalar h_;
  Vector<Scalar> nodes_;
};

template <typename Scalar>
Mesh<Scalar> build_mesh(Scalar length, Index n_elems) {
  return Mesh<Scalar>(length, n_elems);
}

/// Continuous piecewise-linear function on a mesh.
template <typename Scalar>
class NodalFunction {
 public:
  NodalFunction(Mesh<Scalar> mesh, Vector<Scalar> values)
      : mesh_(std::move(mesh)), values_(std::move(values)) {
    if (values_.size() != mesh_.n_nodes()) {
      throw InvalidArgument("nodal function needs " + std::to_string(mesh_.n_nodes()) +
                            " values, got " + std::to_string(values_.size()));
    }
  }

  const Mesh<Scalar>& mesh() const noexcept { return mesh_; }
  const Vector<Scalar>& values() const noexcept { return values_; }
  Scalar value(Index i) const { return values_[i]; }

  /// Constant derivative on element e.
  Scalar slope(Index e) const { return (values_[e + 1] - values_[e]) / mesh_.h(); }

  Vector<Scalar> slopes() const {
    const Index n = mesh_.n_elems();
    return (values_.tail(n) - values_.head(n)) / mesh_.h();
  }

  Scalar operator()(Scalar x) const {
    const Index e = mesh_.locate(x);
    const Scalar t = (x - mesh_.node(e)) / mesh_.h();
    return values_[e] * (1 - t) + values_[e + 1] * t;
  }

  Scalar derivative(Scalar x) const { return slope(mesh_.locate(x)); }

  ScalarField<Scalar> as_field() const {
    auto self = *this;
    return ScalarField<Scalar>([self](Scalar x) { return self(x); }, "piecewise-linear");
  }

  ScalarField<Scalar> derivative_field() const {
    auto self = *this;
    return ScalarField<Scalar>([self](Scalar x) { return self.derivative(x); },
                               "piecewise-constant derivative");
  }

 private:
  Mesh<Scalar> mesh_;
  Vector<Scalar> values_;
};

/// Nodal interpolant of a field.
template <typename Scalar>
NodalFunction<Scalar> interpolate(const Mesh<Scalar>& mesh, const ScalarField<Scalar>& field) {
  Vector<Scalar> v(mesh.n_nodes());
  for (Index i = 0; i < mesh.n_nodes(); ++i) v[i] = field(mesh.node(i));
  return {mesh, std::move(v)};
}

}  // namespace decomp1d
