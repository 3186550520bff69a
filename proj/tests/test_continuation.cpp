#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "octslice/continuation.hpp"
#include "octslice/regularity.hpp"
#include "octslice/sampling.hpp"
#include "octslice/suites.hpp"

using namespace octslice;

namespace {

constexpr double pi = std::numbers::pi;
const double r2 = std::sqrt(2.0);

ImaginaryUnit u(int i) { return ImaginaryUnit::basis(i); }
Octonion e(int i) { return Octonion::basis(i); }

PlanarPath alpha_path() { return PlanarPath::arc({0.0, 1.0, 0.0, pi / 2}); }
PlanarPath j_path() { return PlanarPath::arc({0.0, 1.0, 0.0, -3 * pi / 2}); }

}  // namespace

TEST(BranchArguments, SinglePoint) {
  const BranchState b = continue_sqrt(PlanarPath(std::vector<std::complex<double>>{{1.0, 0.0}}), 0.0);
  EXPECT_DOUBLE_EQ(b.theta, 0.0);
  EXPECT_OCT_NEAR(sqrt_on_slice(b, u(1)), Octonion(1.0), 1e-15);
}

TEST(BranchArguments, QuarterArc) {
  const BranchState b = continue_sqrt(alpha_path(), 0.0);
  EXPECT_NEAR(b.theta, pi / 2, 1e-12);
  EXPECT_OCT_NEAR(sqrt_on_slice(b, u(1)), (Octonion(1.0) + e(1)) / r2, 1e-12);
}

TEST(BranchArguments, ThreeQuarterArcClockwise) {
  const auto theta = branch_arguments(j_path(), 0.0);
  EXPECT_NEAR(theta.back(), -3 * pi / 2, 1e-12);
  const BranchState b = continue_sqrt(j_path(), 0.0);
  EXPECT_OCT_NEAR(sqrt_on_slice(b, u(2)), (Octonion(-1.0) - e(2)) / r2, 1e-12);
  for (std::size_t k = 1; k < theta.size(); ++k) EXPECT_LT(theta[k], theta[k - 1]);
}

TEST(BranchArguments, Errors) {
  try {
    (void)branch_arguments(PlanarPath(std::vector<std::complex<double>>{{-1.0, 0.0}, {1.0, 0.0}}), pi);
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_STREQ(err.what(), "branch point on path");
  }
  EXPECT_THROW(branch_arguments(alpha_path(), 1.0), DomainError);
  EXPECT_NO_THROW(branch_arguments(alpha_path(), 2 * pi));
}

TEST(BranchArguments, RefinementIsStable) {
  const double coarse = continue_sqrt(j_path(), 0.0).theta;
  const double fine = continue_sqrt(j_path().refined(10), 0.0).theta;
  EXPECT_LE(std::abs(coarse - fine), 1e-9);
}

TEST(PrincipalSqrt, Values) {
  EXPECT_OCT_NEAR(principal_sqrt(4.0, 0.0, u(3)), Octonion(2.0), 1e-15);
  EXPECT_OCT_NEAR(principal_sqrt(0.0, 2.0, u(3)), Octonion(1.0) + e(3), 1e-15);
  Rng rng(71);
  for (int k = 0; k < 200; ++k) {
    const ImaginaryUnit U = rng.unit();
    const double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2);
    const Octonion s = principal_sqrt(x, y, U);
    EXPECT_OCT_NEAR(s * s, Octonion(x) + y * U.value(), 1e-12);
    EXPECT_GE(s.re(), 0.0);
  }
}

TEST(WeakSqrt, ReferenceValues) {
  const ImaginaryUnit I = u(1), J = u(2);
  const WeakSqrtExtension f(1, I, J);
  EXPECT_OCT_NEAR(f(SlicePoint::real({1.0})), Octonion(1.0), 1e-15);
  EXPECT_OCT_NEAR(f(SlicePoint({0}, {1}, J)), (Octonion(-1.0) - e(2)) / r2, 1e-12);
  EXPECT_OCT_NEAR(f(SlicePoint({0}, {-1}, J)), (Octonion(1.0) - e(2)) / r2, 1e-12);
  EXPECT_OCT_NEAR(f(SlicePoint({0}, {1}, I)), (Octonion(1.0) + e(1)) / r2, 1e-12);
  EXPECT_OCT_NEAR(f(SlicePoint::real({-1.0})), -e(2), 1e-12);
  try {
    (void)f(SlicePoint::real({3.0}));
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_STREQ(err.what(), "point outside the square-root domain");
  }
  EXPECT_THROW(f(SlicePoint({0}, {-1}, I)), DomainError);
}

TEST(WeakSqrt, SquaresToFirstCoordinate) {
  Rng rng(72);
  const ImaginaryUnit I = u(1), J = rng.unit();
  const WeakSqrtExtension f(2, I, J);
  int hits = 0;
  for (int k = 0; k < 4000; ++k) {
    const ImaginaryUnit U = k % 3 == 0 ? I : k % 3 == 1 ? J : rng.unit();
    RealVector x = rng.vector(2, -1.5, 1.5), y = rng.vector(2, -1.5, 1.5);
    x[1] *= 0.1, y[1] *= 0.1;
    const SlicePoint q(x, y, U);
    if (!domain_contains(f.domain(), q)) continue;
    // On B(-th1, 1/2) off C_J the value is sqrt(-q1)(-J), not a square root.
    const auto o = q.to_octonions();
    if (k % 3 != 1 && (o[0] + Octonion(1.0)).norm2() + o[1].norm2() < 0.25) continue;
    ++hits;
    const Octonion s = f(q);
    EXPECT_OCT_NEAR(s * s, q.to_octonions()[0], 1e-12);
  }
  EXPECT_GT(hits, 300);
}

TEST(WeakSqrt, NegativeBallOffTheJSlice) {
  const WeakSqrtExtension f(1, u(1), u(2));
  Rng rng(74);
  for (int k = 0; k < 100; ++k) {
    const ImaginaryUnit U = rng.unit();
    const double x = rng.uniform(-1.3, -0.7), y = rng.uniform(-0.3, 0.3);
    if (std::hypot(x + 1.0, y) >= 0.5) continue;
    EXPECT_OCT_NEAR(f(SlicePoint({x}, {y}, U)), principal_sqrt(-x, -y, U) * (-e(2)), 1e-12);
  }
}

TEST(WeakSqrt, RealBallsAndBranchAgreement) {
  const WeakSqrtExtension f(1, u(1), u(2));
  for (double x : {0.6, 0.9, 1.0, 1.3}) EXPECT_OCT_NEAR(f(SlicePoint::real({x})), Octonion(std::sqrt(x)), 1e-15);
  for (double x : {-0.6, -1.0, -1.3}) EXPECT_OCT_NEAR(f(SlicePoint::real({x})), -std::sqrt(-x) * e(2), 1e-12);
  // Near -1 on C_J the ball value and the tube value coincide.
  const SlicePoint q({-0.9}, {0.05}, u(2));
  const Octonion tube = sqrt_on_slice(std::abs(std::complex<double>(-0.9, 0.05)),
                                      std::arg(std::complex<double>(-0.9, 0.05)) - 2 * pi, u(2));
  EXPECT_OCT_NEAR(f(q), tube, 1e-12);
}

TEST(WeakSqrt, EvalChecksDomain) {
  const DomainSpec omega = sqrt_example_domain(1, u(1), u(2));
  EXPECT_OCT_NEAR(eval_weak_sqrt(SlicePoint::real({1.2}), omega, u(1), u(2)), Octonion(std::sqrt(1.2)), 1e-15);
  EXPECT_THROW(eval_weak_sqrt(SlicePoint({0}, {1}, u(5)), omega, u(1), u(2)), DomainError);
}

TEST(WeakSqrt, HolomorphicOnEachSlice) {
  const WeakSqrtExtension f(1, u(1), u(2));
  const SliceFunction g = f.as_function();
  const std::vector<std::pair<std::complex<double>, ImaginaryUnit>> points{
      {{1.1, 0.1}, u(1)}, {{0.5, 0.6}, u(1)}, {{0.1, 1.05}, u(1)},
      {{0.6, -0.6}, u(2)}, {{-0.7, -0.7}, u(2)}, {{-0.7, 0.7}, u(2)}};
  for (const auto& [z, U] : points) {
    const CRReport r = cr_residual_slice(g, U, SlicePoint::on_slice({z}, U), 1e-3);
    EXPECT_LE(r.max_residual(), 1e-5);
    ASSERT_TRUE(r.ratio.has_value());
    EXPECT_NEAR(*r.ratio, 4.0, 0.1);
  }
}

TEST(NotSlice, DefaultUnits) {
  const NotSliceReport r = verify_not_slice(u(1), u(2));
  EXPECT_NEAR(r.residual, r2, 1e-12);
  EXPECT_OCT_NEAR(r.f_I, (Octonion(1.0) + e(1)) / r2, 1e-12);
  EXPECT_OCT_NEAR(r.f_J, (Octonion(-1.0) - e(2)) / r2, 1e-12);
  EXPECT_OCT_NEAR(r.f_minus_J, (Octonion(1.0) - e(2)) / r2, 1e-12);
  const auto j = to_json(r);
  for (const char* key : {"f_theta1_I", "f_theta1_J", "f_minus_theta1_J", "lhs", "rhs", "residual"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(NotSlice, SliceControlHasZeroResidual) {
  const SliceFunction id = complex_polynomial([](const ComplexVector& z) { return z[0]; }, Octonion(1.0));
  EXPECT_LE(not_slice_test(id, 1, u(1), u(2)).residual, 1e-12);
  EXPECT_LE(not_slice_test(slice_test_functions()[4].f, 1, u(3), u(6)).residual, 1e-12);
}

TEST(NotSlice, ResidualDependsOnAngleBetweenUnits) {
  // The gap between f(th1 I) and the two-point formula is sqrt(2 (1 + <I, J>)).
  Rng rng(73);
  const ImaginaryUnit I = u(1);
  for (int k = 0; k < 200; ++k) {
    const ImaginaryUnit J = rng.unit();
    const double c = scalar_product(I.value(), J.value());
    if (std::abs(std::abs(c) - 1.0) < 1e-3) continue;
    EXPECT_NEAR(verify_not_slice(I, J).residual, std::sqrt(2.0 * (1.0 + c)), 1e-9);
  }
  for (int j = 2; j < 8; ++j) EXPECT_NEAR(verify_not_slice(I, u(j), 2).residual, r2, 1e-12);
}
