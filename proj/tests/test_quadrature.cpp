#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numeric>
#include <random>

#include "decomp1d/quadrature.hpp"

using namespace decomp1d;

TEST(GaussLegendre, WeightsSumToOneAndPointsAscend) {
  for (int n = 2; n <= 5; ++n) {
    const auto rule = gauss_legendre<double>(n);
    EXPECT_EQ(rule.n_points, n);
    double sum = 0;
    for (int q = 0; q < n; ++q) {
      sum += rule.weights[q];
      EXPECT_GT(rule.points[q], 0.0);
      EXPECT_LT(rule.points[q], 1.0);
      if (q > 0) {
        EXPECT_LT(rule.points[q - 1], rule.points[q]);
      }
    }
    EXPECT_NEAR(sum, 1.0, 1e-15);
  }
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1) {
  for (int n = 2; n <= 5; ++n) {
    const auto rule = gauss_legendre<double>(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double got = 0;
      for (int q = 0; q < n; ++q) got += rule.weights[q] * std::pow(rule.points[q], k);
      EXPECT_NEAR(got, 1.0 / (k + 1), 1e-15) << "n=" << n << " k=" << k;
    }
    // ...and not for degree 2n.
    double got = 0;
    for (int q = 0; q < n; ++q) got += rule.weights[q] * std::pow(rule.points[q], 2 * n);
    EXPECT_GT(std::abs(got - 1.0 / (2 * n + 1)), 1e-8);
  }
}

TEST(GaussLegendre, RejectsUnsupportedSizes) {
  EXPECT_THROW(gauss_legendre<double>(1), InvalidArgument);
  EXPECT_THROW(gauss_legendre<double>(6), InvalidArgument);
}

TEST(Adaptive, MatchesBoostOnSmoothIntegrands) {
  auto f1 = [](double x) { return std::exp(-x) * std::sin(10 * x); };
  auto f2 = [](double x) { return 1.0 / (1.0 + 25 * x * x); };
  auto f3 = [](double x) { return std::sqrt(x); };
  boost::math::quadrature::tanh_sinh<double> ts;
  EXPECT_NEAR(integrate_adaptive<double>(f1, 0.0, 3.0),
              (boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f1, 0.0, 3.0, 20, 1e-14)),
              1e-10);
  EXPECT_NEAR(integrate_adaptive<double>(f2, -1.0, 1.0), ts.integrate(f2, -1.0, 1.0), 1e-10);
  EXPECT_NEAR(integrate_adaptive<double>(f3, 0.0, 1.0), 2.0 / 3.0, 1e-10);
}

TEST(Adaptive, EmptyAndReversedIntervals) {
  auto f = [](double x) { return x * x; };
  EXPECT_EQ(integrate_adaptive<double>(f, 0.4, 0.4), 0.0);
  EXPECT_NEAR(integrate_adaptive<double>(f, 1.0, 0.0), -1.0 / 3.0, 1e-14);
}

TEST(Adaptive, ThrowsWhenBudgetIsExhausted) {
  auto f = [](double x) { return std::sin(1.0 / (x + 1e-9)); };
  AdaptiveOptions opts;
  opts.abs_tol = 1e-15;
  opts.max_subintervals = 20;
  EXPECT_THROW(integrate_adaptive<double>(f, 0.0, 1.0, opts), AccuracyError);
}

TEST(Adaptive, RelativeToleranceResolvesTinyIntegrals) {
  auto f = [](double x) { return 1e-20 * std::cos(x); };
  AdaptiveOptions opts;
  opts.abs_tol = 1e-40;
  opts.rel_tol = 1e-12;
  EXPECT_NEAR(integrate_adaptive<double>(f, 0.0, 1.0, opts) / 1e-20, std::sin(1.0), 1e-11);
}

TEST(Cumulative, PrefixIntegralsOnRandomPoints) {
  auto g = [](double x) { return std::cos(3 * x) + x; };
  CumulativeIntegral<double, decltype(g)> cum(g, 2.0, 1e-12, 64);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    EXPECT_NEAR(cum(x), std::sin(3 * x) / 3 + x * x / 2, 1e-12);
  }
  EXPECT_EQ(cum(0.0), 0.0);
  EXPECT_NEAR(cum.total(), std::sin(6.0) / 3 + 2.0, 1e-12);
  EXPECT_EQ(cum(5.0), cum.total());
}
