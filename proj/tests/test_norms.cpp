#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "decomp1d/norms.hpp"
#include "decomp1d/verify.hpp"

using namespace decomp1d;

namespace {

const auto q5 = gauss_legendre<double>(5);
ScalarField<double> field(std::function<double(double)> f) { return {std::move(f), "test"}; }

}  // namespace

TEST(L2Error, KnownValues) {
  const auto mesh = build_mesh(1.0, 16);
  const auto lin = field([](double x) { return 2 - 3 * x; });
  EXPECT_LT(l2_error(interpolate(mesh, lin), lin, q5), 1e-14);
  const auto zero = interpolate(mesh, constant_field(0.0));
  EXPECT_NEAR(l2_error(zero, constant_field(1.0), q5), 1.0, 1e-15);
  EXPECT_NEAR(l2_error(zero, field([](double x) { return x; }), q5), 0.5773503, 1e-7);
}

TEST(H1Error, KnownValues) {
  const auto mesh = build_mesh(1.0, 16);
  const auto lin = interpolate(mesh, field([](double x) { return 2 - 3 * x; }));
  EXPECT_LT(h1_seminorm_error(lin, constant_field(-3.0), q5), 1e-14);
  const auto zero = interpolate(mesh, constant_field(0.0));
  EXPECT_NEAR(h1_seminorm_error(zero, constant_field(1.0), q5), 1.0, 1e-15);
  EXPECT_NEAR(h1_seminorm_error(zero, field([](double x) { return 2 * x; }), q5), 1.1547005, 1e-7);
}

TEST(NestedNorms, AgreeWithFieldNorms) {
  const auto coarse = interpolate(build_mesh(1.0, 8), field([](double x) { return std::sin(3 * x); }));
  const auto fine = interpolate(build_mesh(1.0, 64), field([](double x) { return std::cos(x); }));
  double sum = 0;
  for (Index e = 0; e < 64; ++e) {
    auto d2 = [&](double x) { return std::pow(coarse(x) - fine(x), 2); };
    sum += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(d2, e / 64.0, (e + 1) / 64.0);
  }
  EXPECT_NEAR(l2_error(coarse, fine, q5), std::sqrt(sum), 1e-13);
  EXPECT_THROW(l2_error(coarse, interpolate(build_mesh(1.0, 12), constant_field(0.0)), q5),
               InvalidArgument);
  // Identical functions on nested meshes have zero distance.
  const auto refined = interpolate(build_mesh(1.0, 32), coarse.as_field());
  EXPECT_LT(l2_error(coarse, refined, q5), 1e-15);
  EXPECT_LT(h1_seminorm_error(coarse, refined), 1e-13);
}

TEST(Norms, TriangleInequalityOnRandomFunctions) {
  std::mt19937 rng(5);
  std::normal_distribution<double> n(0.0, 1.0);
  const auto mesh = build_mesh(1.0, 20);
  for (int t = 0; t < 50; ++t) {
    Vector<double> a(21), b(21);
    for (int i = 0; i < 21; ++i) {
      a[i] = n(rng);
      b[i] = n(rng);
    }
    NodalFunction<double> fa(mesh, a), fb(mesh, b);
    const auto zero = constant_field(0.0);
    const double dab = l2_error(fa, fb.as_field(), q5);
    EXPECT_LE(dab, l2_error(fa, zero, q5) + l2_error(fb, zero, q5) + 1e-14);
    EXPECT_GE(dab, 0.0);
  }
}

TEST(SupNorm, KnownValues) {
  EXPECT_EQ(sup_norm(constant_field(0.0), 1.0, 100), 0.0);
  EXPECT_NEAR(sup_norm(field([](double x) { return std::log1p(x * x); }), 1.0, 1000),
              std::numbers::ln2, 1e-15);
  const auto psi = field([](double x) { return -std::log(1 - 0.5 * std::sin(10 * std::numbers::pi * x)); });
  EXPECT_NEAR(sup_norm(psi, 1.0, 65536), std::numbers::ln2, 1e-6);
  EXPECT_THROW(sup_norm(psi, 1.0, 1), InvalidArgument);
}

TEST(TailBound, KnownValues) {
  EXPECT_EQ(tail_bound(0.0, 3), 0.0);
  EXPECT_NEAR(tail_bound(1.0, 1), 1.3591409, 1e-7);
  EXPECT_NEAR(tail_bound(std::numbers::ln2, 4), 0.0026667, 1e-7);
  EXPECT_THROW(tail_bound(-1.0, 2), InvalidArgument);
  EXPECT_THROW(tail_bound(1.0, -1), InvalidArgument);
}

TEST(TailBound, ExplicitTailsStayBelow) {
  for (const auto& r : check_tail_bound()) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(TheoremBound, ConstantCoefficientIsAllZero) {
  auto p = make_problem<double>("one", 1.0, constant_field(1.0), constant_field(1.0), 0.0, 0.0);
  for (const auto& t : theorem_bound_check(p, 4, 1e-10)) {
    EXPECT_EQ(t.h1_error, 0.0);
    EXPECT_EQ(t.bound, 0.0);
  }
}

TEST(TheoremBound, Example1HoldsWithFactorialDecay) {
  const auto p = builtin_problem("ex1");
  const auto triples = theorem_bound_check(p, 8, 1e-10);
  ASSERT_EQ(triples.size(), 8u);
  const double sup = std::numbers::ln2;
  for (std::size_t k = 0; k < triples.size(); ++k) {
    EXPECT_LE(triples[k].h1_error, triples[k].bound);
    if (k + 1 < triples.size()) {
      const int M = triples[k].M;
      EXPECT_LE(triples[k + 1].h1_error / triples[k].h1_error, sup / (M + 2) * 1.5) << "M=" << M;
    }
  }
}

TEST(TheoremBound, Example3Holds) {
  EXPECT_NO_THROW(theorem_bound_check(builtin_problem("ex3"), 8, 1e-10));
}

// The continuous truncation error is the limit of the discrete one.
TEST(TheoremBound, DiscreteErrorApproachesContinuousValue) {
  const auto p = builtin_problem("ex1");
  const auto t = theorem_bound_check(p, std::vector<int>{3}, 1e-10).front();
  const auto U = solve_improved(p, 4096, 3, gauss_legendre<double>(3)).U_M;
  EXPECT_NEAR(h1_seminorm_error(U, *p.exact_derivative, q5), t.h1_error, 0.05 * t.h1_error);
}

TEST(TheoremBound, ViolationCarriesTriples) {
  BoundViolation v({{2, 1.0, 0.5}}, "violated");
  ASSERT_EQ(v.triples().size(), 1u);
  EXPECT_EQ(v.triples()[0].M, 2);
}

TEST(ErrorReport, ValidateRejectsBadNorms) {
  ErrorReport r{"ex1", Method::Improved, 8, 2, 1e-3, 1e-2, Reference::ClosedForm};
  EXPECT_NO_THROW(r.validate());
  r.l2_error = -1;
  EXPECT_THROW(r.validate(), Error);
  r.l2_error = std::nan("");
  EXPECT_THROW(r.validate(), Error);
}

TEST(FittedOrder, RecoversPowerLaws) {
  std::vector<double> h{0.1, 0.05, 0.025}, e;
  for (double x : h) e.push_back(3 * x * x);
  EXPECT_NEAR(fitted_order(h, e), 2.0, 1e-12);
}
