#include <cmath>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "octslice/regularity.hpp"
#include "octslice/sampling.hpp"
#include "octslice/suites.hpp"
#include "octslice/taylor.hpp"
#include "oracles.hpp"

using namespace octslice;

namespace {

ImaginaryUnit u(int i) { return ImaginaryUnit::basis(i); }
Octonion e(int i) { return Octonion::basis(i); }
MultiIndex mi(std::vector<int> a) { return MultiIndex(std::move(a)); }

SliceFunction square() {
  return complex_polynomial([](const ComplexVector& z) { return z[0] * z[0]; }, Octonion(1.0));
}

}  // namespace

TEST(MultiIndexTest, Basics) {
  const MultiIndex a = mi({2, 0, 1});
  EXPECT_EQ(a.order(), 3);
  EXPECT_DOUBLE_EQ(a.factorial(), 2.0);
  EXPECT_TRUE(mi({1, 0, 1}).le(a));
  EXPECT_FALSE(mi({0, 1, 0}).le(a));
  EXPECT_EQ(a - mi({1, 0, 1}), mi({1, 0, 0}));
  EXPECT_EQ(MultiIndex::unit(3, 1) + a, mi({2, 1, 1}));
  EXPECT_THROW(mi({-1}), std::invalid_argument);
  EXPECT_THROW(mi({0, 1}) - mi({1, 0}), std::invalid_argument);
  EXPECT_DOUBLE_EQ(binomial(mi({4, 3}), mi({2, 1})), 18.0);
  EXPECT_EQ(sub_indices(mi({2, 1})).size(), 6u);
  const auto all = indices_up_to(2, 3);
  EXPECT_EQ(all.size(), 10u);
  for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LE(all[k - 1].order(), all[k].order());
}

TEST(StarPower, Examples) {
  const SlicePoint q({0}, {1}, u(1));
  const SlicePoint p0 = SlicePoint::real({0});
  EXPECT_EQ(star_power_apply(q, p0, mi({0}), e(5)), e(5));
  EXPECT_OCT_NEAR(star_power_apply(q, p0, mi({2}), e(2)), -e(2), 1e-15);

  const SlicePoint r({0.5}, {1.5}, u(3));
  const SlicePoint p = SlicePoint::real({0.25});
  const Octonion a = Octonion(1.0) + e(6);
  const Octonion qp = r.to_octonions()[0] - Octonion(0.25);
  EXPECT_OCT_NEAR(star_power_apply(r, p, mi({1}), a), qp * a, 1e-15);
}

TEST(StarPower, RealCenterMatchesRepeatedLeftMultiplication) {
  Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    const SlicePoint q(rng.vector(1, -1, 1), rng.vector(1, -1, 1), rng.unit());
    const SlicePoint p = SlicePoint::real(rng.vector(1, -1, 1));
    const Octonion a = rng.octonion();
    const Octonion d = q.to_octonions()[0] - p.to_octonions()[0];
    Octonion expected = a;
    for (int j = 0; j < 4; ++j) expected = d * expected;
    EXPECT_OCT_NEAR(star_power_apply(q, p, mi({4}), a), expected, 1e-12);
  }
}

TEST(StarPower, SameSliceReducesToComplexPower) {
  Rng rng(62);
  for (int k = 0; k < 100; ++k) {
    const ImaginaryUnit I = rng.unit();
    const std::complex<double> z(rng.uniform(-1, 1), rng.uniform(-1, 1)), w(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Octonion a = rng.octonion();
    const std::complex<double> c = std::pow(z - w, 3);
    const Octonion expected = c.real() * a + c.imag() * (I.value() * a);
    EXPECT_OCT_NEAR(star_power_apply(SlicePoint::on_slice({z}, I), SlicePoint::on_slice({w}, I), mi({3}), a), expected,
                    1e-12);
  }
}

TEST(StarPower, LinearInCoefficient) {
  Rng rng(63);
  for (int k = 0; k < 50; ++k) {
    const SlicePoint q(rng.vector(2, -1, 1), rng.vector(2, -1, 1), rng.unit());
    const SlicePoint p(rng.vector(2, -1, 1), rng.vector(2, -1, 1), rng.unit());
    const MultiIndex alpha = mi({1 + k % 2, 2 - k % 2});
    const Octonion a = rng.octonion(), b = rng.octonion();
    const double s = rng.uniform(-3, 3);
    EXPECT_OCT_NEAR(star_power_apply(q, p, alpha, a + s * b),
                    star_power_apply(q, p, alpha, a) + s * star_power_apply(q, p, alpha, b), 1e-12);
  }
}

TEST(StarPower, OuterFactorIsFirstVariable) {
  const std::vector<Octonion> v{e(1), e(2)};
  const Octonion got = from_vec(operator_power(v, mi({1, 1})) * to_vec(e(4)));
  EXPECT_OCT_NEAR(got, e(1) * (e(2) * e(4)), 1e-15);
  EXPECT_GT((got - (e(1) * e(2)) * e(4)).norm(), 1.0);
}

TEST(Stencil, MatchesVandermondeOracle) {
  for (int m = 1; m <= 4; ++m)
    for (int k = 0; k <= 2 * m; ++k) {
      const auto w = central_stencil_weights(k, m, 0.1);
      const auto o = oracle::stencil_weights(k, m, 0.1);
      ASSERT_EQ(w.size(), o.size());
      for (std::size_t j = 0; j < w.size(); ++j) EXPECT_NEAR(w[j], o[j], 1e-9 * std::pow(10.0, k)) << k << "," << m;
    }
  const auto w = central_stencil_weights(2, 1, 1.0);
  EXPECT_DOUBLE_EQ(w[0], 1.0);
  EXPECT_DOUBLE_EQ(w[1], -2.0);
  EXPECT_DOUBLE_EQ(w[2], 1.0);
  EXPECT_THROW(central_stencil_weights(3, 1, 1.0), std::invalid_argument);
}

TEST(TaylorCoeffs, Examples) {
  const StarSeries s = taylor_coeffs(square(), SlicePoint::real({0}), 2, 0.1);
  EXPECT_OCT_NEAR(s.coeffs.at(mi({0})), Octonion(), 1e-12);
  EXPECT_OCT_NEAR(s.coeffs.at(mi({1})), Octonion(), 1e-12);
  EXPECT_OCT_NEAR(s.coeffs.at(mi({2})), Octonion(2.0), 1e-12);
  const Octonion q = Octonion(1.0) + e(2);
  EXPECT_OCT_NEAR(series_eval(s, SlicePoint({1}, {1}, u(2))), q * q, 1e-12);

  SliceFunction c;
  c.eval = [](const SlicePoint&) { return e(3); };
  const StarSeries cs = taylor_coeffs(c, SlicePoint({0.1}, {0.2}, u(5)), 3, 0.1);
  for (const auto& [alpha, a] : cs.coeffs) EXPECT_OCT_NEAR(a, alpha.order() == 0 ? e(3) : Octonion(), 1e-12);

  const SliceFunction prod = complex_polynomial([](const ComplexVector& z) { return z[0] * z[1]; }, e(6));
  const StarSeries ps = taylor_coeffs(prod, SlicePoint::real({0.3, -0.2}), 2, 0.1);
  EXPECT_OCT_NEAR(ps.coeffs.at(mi({1, 1})), e(6), 1e-12);
  EXPECT_OCT_NEAR(ps.coeffs.at(mi({2, 0})), Octonion(), 1e-12);
  EXPECT_THROW(taylor_coeffs(square(), SlicePoint::real({0}), 2, 0.0), DomainError);
}

TEST(TaylorCoeffs, IdentitySeries) {
  StarSeries s{SlicePoint::real({0}), {{mi({1}), Octonion(1.0)}}, 1, FactorialConvention::divide};
  EXPECT_OCT_NEAR(series_eval(s, SlicePoint({0}, {1}, u(5))), e(5), 1e-15);
}

TEST(TaylorCoeffs, ReconstructsPolynomialsOffTheCenterSlice) {
  Rng rng(64);
  const ImaginaryUnit I = u(3);
  const SlicePoint p(RealVector{0.1, 0.2}, RealVector{0.2, 0.0}, I);
  const SliceFunction f = complex_polynomial(
      [](const ComplexVector& z) { return z[0] * z[0] * z[1] - 2.0 * z[1] * z[1] * z[1] * z[1] + z[0]; },
      Octonion(0.5) - e(7));
  const StarSeries s = taylor_coeffs(f, p, 4, 0.1);
  for (int k = 0; k < 100; ++k) {
    const SlicePoint q(rng.vector(2, -0.1, 0.3), rng.vector(2, -0.1, 0.1), rng.unit());
    EXPECT_OCT_NEAR(series_eval(s, q), f(q), 1e-9);
  }
}

TEST(TaylorCoeffs, StarExponential) {
  StarSeries s{SlicePoint::real({0}), {}, 20, FactorialConvention::divide};
  for (int k = 0; k <= 20; ++k) s.coeffs.emplace(mi({k}), Octonion(1.0));
  EXPECT_OCT_NEAR(series_eval(s, SlicePoint({0}, {1}, u(1))), Octonion(std::cos(1.0)) + std::sin(1.0) * e(1), 1e-9);
  // Without 1/k! the coefficients must carry it.
  StarSeries t = s;
  t.convention = FactorialConvention::none;
  for (auto& [alpha, a] : t.coeffs) a = Octonion(1.0 / alpha.factorial());
  EXPECT_OCT_NEAR(series_eval(t, SlicePoint({0}, {1}, u(1))), series_eval(s, SlicePoint({0}, {1}, u(1))), 1e-15);
}

TEST(TaylorCoeffs, JsonRoundTrip) {
  const StarSeries s = taylor_coeffs(square(), SlicePoint({0.1}, {0.3}, u(2)), 3, 0.1);
  const nlohmann::json j = to_json(s);
  for (const char* key : {"center", "convention", "coeffs"}) EXPECT_TRUE(j.contains(key));
  const StarSeries back = star_series_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.center, s.center);
  EXPECT_EQ(back.coeffs, s.coeffs);
  EXPECT_EQ(back.max_degree, 3);
  nlohmann::json bad = j;
  bad["convention"] = "sometimes";
  EXPECT_THROW(star_series_from_json(bad), std::invalid_argument);
}

TEST(StarMonomials, WeaklyRegularWithSecondOrderResiduals) {
  const SlicePoint p({0.1}, {0.3}, u(5));
  const SlicePolydisc disc(SlicePoint::real({0.0}), {1.0});
  const RegularityReport r = weak_regularity_report(star_monomial(p, {3}, e(2)), region_of(disc, 1.0), 7, 5, 1e-3);
  for (const auto& rec : r.records) {
    ASSERT_TRUE(rec.ratio.has_value());
    EXPECT_NEAR(*rec.ratio, 4.0, 0.2);
  }
  EXPECT_LE(r.max_residual, 1e-5);
}

TEST(ModulusBoundMk, Examples) {
  const MkBound ex = bound_check_mk(Octonion(1.0), Octonion(1.0) + e(1), u(1), u(2));
  EXPECT_TRUE(ex.holds);
  EXPECT_NEAR(ex.lower, 1.0, 1e-12);
  EXPECT_NEAR(ex.value, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(ex.upper, std::sqrt(5.0), 1e-12);

  for (int j = 1; j < 8; ++j) {
    const MkBound b = bound_check_mk(Octonion(1.0), Octonion(1.0), u(1), u(j));
    EXPECT_TRUE(b.holds);
    EXPECT_NEAR(b.value, std::sqrt(2.0), 1e-15);
  }
  const MkBound z = bound_check_mk(Octonion(), e(4), u(1), u(2));
  EXPECT_TRUE(z.holds);
  EXPECT_DOUBLE_EQ(z.lower, z.upper);
  try {
    (void)bound_check_mk(Octonion(1.0), e(2), u(1), u(3));
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_STREQ(err.what(), "r s̄ not on slice C_I");
  }
}

TEST(ModulusBoundMk, RandomAdmissibleSamples) {
  Rng rng(65);
  for (int k = 0; k < 2000; ++k) {
    const Octonion r = rng.octonion();
    const ImaginaryUnit I = rng.unit(), J = rng.unit();
    const Octonion w = Octonion(rng.normal()) + rng.normal() * I.value();
    const Octonion s = conj(inv(r) * w);
    const MkBound b = bound_check_mk(r, s, I, J);
    EXPECT_TRUE(b.holds);
    EXPECT_LE(b.rjs_residual, 1e-12 * (1.0 + b.value));
  }
}

TEST(ModulusBoundMlq, Examples) {
  const SlicePoint p({0.2}, {0.4}, u(1));
  const MultiIndex alpha = mi({2});
  // q on the slice of p: equality at one companion.
  const MlqBound same = bound_check_mlq(p, SlicePoint({0.5}, {0.7}, u(1)), alpha, e(2));
  EXPECT_TRUE(same.holds);
  EXPECT_TRUE(std::abs(same.value - same.lower) < 1e-12 || std::abs(same.value - same.upper) < 1e-12);
  const MlqBound real = bound_check_mlq(p, SlicePoint::real({0.5}), alpha, e(2));
  EXPECT_NEAR(real.lower, real.upper, 1e-14);
  EXPECT_NEAR(real.value, real.upper, 1e-14);
  EXPECT_TRUE(bound_check_mlq(p, SlicePoint({0.5}, {0.7}, u(4)), alpha, e(2)).holds);
}

TEST(ModulusBoundMlq, RandomSamples) {
  Rng rng(66);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 3);
    const ImaginaryUnit I = rng.unit();
    const SlicePoint p(rng.vector(n, -1, 1), rng.vector(n, -1, 1), I);
    const SlicePoint q(rng.vector(n, -1, 1), rng.vector(n, -1, 1), rng.unit());
    std::vector<int> alpha(n, 0);
    for (int j = 0; j < k % 5; ++j) ++alpha[static_cast<std::size_t>(j) % n];
    EXPECT_TRUE(bound_check_mlq(p, q, MultiIndex(alpha), rng.octonion()).holds);
  }
}
