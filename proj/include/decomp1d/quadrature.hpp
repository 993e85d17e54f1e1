#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "decomp1d/errors.hpp"

namespace decomp1d {

/// Gauss-Legendre rule mapped to the reference element [0, 1].
///
/// Weights sum to one, so an element integral is `h * sum(w_q * g(x_e + h * xi_q))`.
template <typename Scalar>
struct GaussRule {
  int n_points = 0;
  std::array<Scalar, 5> points{};
  std::array<Scalar, 5> weights{};
};

template <typename Scalar>
GaussRule<Scalar> gauss_legendre(int n_points) {
  // Nodes and weights on [-1, 1], nonnegative half only.
  static constexpr long double x2[] = {0.577350269189625764509148780501957456L};
  static constexpr long double w2[] = {1.0L};
  static constexpr long double x3[] = {0.0L, 0.774596669241483377035853079956479922L};
  static constexpr long double w3[] = {0.888888888888888888888888888888888889L,
                                       0.555555555555555555555555555555555556L};
  static constexpr long double x4[] = {0.339981043584856264802665759103244687L,
                                       0.861136311594052575223946488892809505L};
  static constexpr long double w4[] = {0.652145154862546142626936050778000593L,
                                       0.347854845137453857373063949221999407L};
  static constexpr long double x5[] = {0.0L, 0.538469310105683091036314420700208805L,
                                       0.906179845938663992797626878299392965L};
  static constexpr long double w5[] = {0.568888888888888888888888888888888889L,
                                       0.478628670499366468041291514835638192L,
                                       0.236926885056189087514264040719917363L};

  const long double* xs = nullptr;
  const long double* ws = nullptr;
  std::size_t half = 0;
  switch (n_points) {
    case 2: xs = x2; ws = w2; half = 1; break;
    case 3: xs = x3; ws = w3; half = 2; break;
    case 4: xs = x4; ws = w4; half = 2; break;
    case 5: xs = x5; ws = w5; half = 3; break;
    default:
      throw InvalidArgument("Gauss-Legendre rule must have 2..5 points, got " +
                            std::to_string(n_points));
  }

  GaussRule<Scalar> rule;
  rule.n_points = n_points;
  int k = 0;
  for (std::size_t i = 0; i < half; ++i) {
    const long double x = xs[i];
    const long double w = ws[i];
    if (x == 0.0L) {
      rule.points[k] = Scalar(0.5L);
      rule.weights[k] = Scalar(w / 2.0L);
      ++k;
    } else {
      rule.points[k] = Scalar((1.0L - x) / 2.0L);
      rule.weights[k] = Scalar(w / 2.0L);
      ++k;
      rule.points[k] = Scalar((1.0L + x) / 2.0L);
      rule.weights[k] = Scalar(w / 2.0L);
      ++k;
    }
  }
  // Ascending order on [0, 1].
  std::array<int, 5> order{0, 1, 2, 3, 4};
  std::sort(order.begin(), order.begin() + n_points,
            [&](int a, int b) { return rule.points[a] < rule.points[b]; });
  GaussRule<Scalar> sorted = rule;
  for (int i = 0; i < n_points; ++i) {
    sorted.points[i] = rule.points[order[i]];
    sorted.weights[i] = rule.weights[order[i]];
  }
  return sorted;
}

namespace detail {

inline constexpr long double kronrod_nodes[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.0L};
inline constexpr long double kronrod_weights[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
// Weights of the embedded 7-point Gauss rule at Kronrod nodes 1, 3, 5, 7.
inline constexpr long double gauss7_weights[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <typename Scalar>
struct Panel {
  Scalar a;
  Scalar b;
  Scalar value;
  Scalar error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename Scalar, typename F>
Panel<Scalar> kronrod15(F& f, Scalar a, Scalar b) {
  const Scalar center = (a + b) / 2;
  const Scalar half = (b - a) / 2;
  const Scalar fc = f(center);
  Scalar kronrod = fc * Scalar(kronrod_weights[7]);
  Scalar gauss = fc * Scalar(gauss7_weights[3]);
  for (int i = 0; i < 7; ++i) {
    const Scalar dx = half * Scalar(kronrod_nodes[i]);
    const Scalar sum = f(center - dx) + f(center + dx);
    kronrod += Scalar(kronrod_weights[i]) * sum;
    if (i % 2 == 1) gauss += Scalar(gauss7_weights[i / 2]) * sum;
  }
  kronrod *= half;
  gauss *= half;
  using std::abs;
  return {a, b, kronrod, abs(kronrod - gauss)};
}

}  // namespace detail

struct AdaptiveOptions {
  double abs_tol = 1e-10;
  /// Also accept an estimate below rel_tol * |integral|; zero disables.
  double rel_tol = 0;
  std::size_t max_subintervals = 1'000'000;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of `f` over [a, b].
///
/// The panel with the largest error estimate is halved until the summed
/// estimate drops below the tolerance. Throws AccuracyError once the
/// subdivision budget is exhausted.
template <typename Scalar, typename F>
Scalar integrate_adaptive(F&& f, Scalar a, Scalar b, const AdaptiveOptions& opts = {}) {
  if (a == b) return Scalar(0);
  using std::abs;
  auto first = detail::kronrod15<Scalar>(f, a, b);
  Scalar total = first.value;
  Scalar error = first.error;
  auto target = [&] { return std::max(Scalar(opts.abs_tol), Scalar(opts.rel_tol) * abs(total)); };
  if (error <= target()) return total;

  std::priority_queue<detail::Panel<Scalar>> panels;
  panels.push(first);
  std::size_t count = 1;
  while (error > target()) {
    if (count >= opts.max_subintervals) {
      throw AccuracyError("adaptive quadrature did not converge", double(error), double(target()));
    }
    const auto worst = panels.top();
    panels.pop();
    const Scalar mid = (worst.a + worst.b) / 2;
    const auto left = detail::kronrod15<Scalar>(f, worst.a, mid);
    const auto right = detail::kronrod15<Scalar>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
    // Running sums drift; resum once the estimate looks converged.
    if (error <= target()) {
      auto copy = panels;
      total = 0;
      error = 0;
      while (!copy.empty()) {
        total += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  return total;
}

/// Prefix integral x -> int_0^x g, tabulated at fixed breakpoints.
///
/// Each panel is integrated to `tol / (2 * panels)`, so the tabulated prefix
/// sums carry at most `tol / 2`; the partial panel up to `x` gets the other half.
template <typename Scalar, typename G>
class CumulativeIntegral {
 public:
  CumulativeIntegral(G integrand, Scalar length, double tol, std::size_t panels = 1024)
      : g_(std::move(integrand)), length_(length), tol_(tol), prefix_(panels + 1) {
    if (!(length > 0)) throw InvalidArgument("cumulative integral needs a positive length");
    if (panels == 0) throw InvalidArgument("cumulative integral needs at least one panel");
    width_ = length_ / Scalar(panels);
    AdaptiveOptions opts;
    opts.abs_tol = tol_ / (2.0 * double(panels));
    prefix_[0] = 0;
    for (std::size_t k = 0; k < panels; ++k) {
      const Scalar a = width_ * Scalar(k);
      const Scalar b = (k + 1 == panels) ? length_ : width_ * Scalar(k + 1);
      prefix_[k + 1] = prefix_[k] + integrate_adaptive<Scalar>(g_, a, b, opts);
    }
  }

  Scalar operator()(Scalar x) const {
    if (x <= 0) return Scalar(0);
    if (x >= length_) return prefix_.back();
    using std::floor;
    const auto panels = prefix_.size() - 1;
    auto k = static_cast<std::size_t>(floor(x / width_));
    if (k >= panels) k = panels - 1;
    const Scalar a = width_ * Scalar(k);
    AdaptiveOptions opts;
    opts.abs_tol = tol_ / 2.0;
    return prefix_[k] + integrate_adaptive<Scalar>(g_, a, x, opts);
  }

  Scalar total() const { return prefix_.back(); }
  Scalar length() const { return length_; }

 private:
  G g_;
  Scalar length_;
  double tol_;
  Scalar width_{};
  std::vector<Scalar> prefix_;
};

}  // namespace decomp1d
