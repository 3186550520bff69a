#include "octslice/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "octslice/continuation.hpp"
#include "octslice/operators.hpp"
#include "octslice/regularity.hpp"
#include "octslice/sampling.hpp"
#include "octslice/taylor.hpp"

namespace octslice {

nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json j{{"suite", r.suite},
                   {"cases", r.cases},
                   {"max_residual", r.max_residual},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass}};
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

bool all_pass(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.pass; });
}

SliceFunction complex_polynomial(std::function<std::complex<double>(const ComplexVector&)> P, const Octonion& a) {
  SliceFunction f;
  f.eval = [P = std::move(P), a](const SlicePoint& q) {
    ComplexVector z(q.dim());
    for (std::size_t l = 0; l < q.dim(); ++l) z[l] = {q.x()[l], q.y()[l]};
    const std::complex<double> w = P(z);
    return w.real() * a + w.imag() * (q.unit().value() * a);
  };
  return f;
}

SliceFunction star_monomial(const SlicePoint& p, const std::vector<int>& alpha, const Octonion& a) {
  SliceFunction f;
  f.eval = [p, alpha = MultiIndex(alpha), a](const SlicePoint& q) { return star_power_apply(q, p, alpha, a); };
  return f;
}

std::vector<NamedFunction> slice_test_functions() {
  using C = std::complex<double>;
  const Octonion one(1.0);
  const Octonion e2 = Octonion::basis(2), e3 = Octonion::basis(3), e5 = Octonion::basis(5),
                 e6 = Octonion::basis(6), e7 = Octonion::basis(7);
  const SlicePoint p2(RealVector{0.3, -0.2}, RealVector{0.4, 0.1}, ImaginaryUnit::basis(1));
  std::vector<NamedFunction> fs;
  fs.push_back({"q", 1, complex_polynomial([](const ComplexVector& z) { return z[0]; }, one)});
  fs.push_back({"q^2", 1, complex_polynomial([](const ComplexVector& z) { return z[0] * z[0]; }, one)});
  fs.push_back({"q^3", 1, complex_polynomial([](const ComplexVector& z) { return z[0] * z[0] * z[0]; }, one)});
  fs.push_back({"q^2 e5", 1, complex_polynomial([](const ComplexVector& z) { return z[0] * z[0]; }, e5)});
  fs.push_back({"exp(q)", 1, complex_polynomial([](const ComplexVector& z) { return std::exp(z[0]); }, one)});
  fs.push_back({"sin(q)(1+e3)", 1,
                complex_polynomial([](const ComplexVector& z) { return std::sin(z[0]); }, one + e3)});
  fs.push_back({"q1 q2", 2, complex_polynomial([](const ComplexVector& z) { return z[0] * z[1]; }, one)});
  fs.push_back({"(q1^2 + 3 q2 - 1/2) e6", 2,
                complex_polynomial([](const ComplexVector& z) { return z[0] * z[0] + C(3.0) * z[1] - C(0.5); }, e6)});
  fs.push_back({"(q - p)^{*(2,1)} (e2+e7)", 2, star_monomial(p2, {2, 1}, e2 + e7)});
  SliceFunction constant;
  constant.eval = [c = Octonion(2.0) + Octonion::basis(4)](const SlicePoint&) { return c; };
  fs.push_back({"2 + e4", 1, constant});
  return fs;
}

SliceFunction nonslice_test_function() {
  SliceFunction f;
  f.eval = [](const SlicePoint& q) { return Octonion::basis(2) * q.to_octonions().front(); };
  return f;
}

namespace {

constexpr double pi = std::numbers::pi;

std::size_t count_or(const SuiteConfig& cfg, std::size_t fallback) { return cfg.probes ? cfg.probes : fallback; }

SuiteResult finish(std::string name, std::size_t cases, double residual, double default_tol,
                   const SuiteConfig& cfg, nlohmann::json details = nlohmann::json::object()) {
  SuiteResult r;
  r.suite = std::move(name);
  r.cases = cases;
  r.max_residual = residual;
  r.tolerance = cfg.tol.value_or(default_tol);
  r.pass = std::isfinite(residual) && residual <= r.tolerance;
  r.details = std::move(details);
  return r;
}

// ---------------------------------------------------------------------------
// verify-algebra

constexpr int kTriples[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {5, 3, 6}, {6, 1, 7}, {7, 2, 5}};

SuiteResult table_suite(const SuiteConfig& cfg) {
  std::size_t cases = 0;
  double worst = 0.0;
  auto check = [&](int i, int j, const Octonion& expected) {
    worst = std::max(worst, max_abs_diff(mul(Octonion::basis(i), Octonion::basis(j)), expected));
    ++cases;
  };
  for (int i = 0; i < 8; ++i) {
    check(0, i, Octonion::basis(i));
    if (i > 0) check(i, 0, Octonion::basis(i));
  }
  for (int i = 1; i < 8; ++i) check(i, i, Octonion(-1.0));
  for (const auto& t : kTriples)
    for (int r = 0; r < 3; ++r) {
      const int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
      check(a, b, Octonion::basis(c));
      check(b, a, -Octonion::basis(c));
    }
  return finish("multiplication_table", cases, worst, 0.0, cfg);
}

SuiteResult alternativity_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed);
  const std::size_t n = count_or(cfg, 10000);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Octonion a = rng.octonion(), b = rng.octonion();
    const double scale = a.norm2() * b.norm() + b.norm2() * a.norm();
    const double left = ((a * a) * b - a * (a * b)).norm();
    const double right = ((a * b) * b - a * (b * b)).norm();
    worst = std::max(worst, std::max(left, right) / scale);
  }
  return finish("alternativity", n, worst, 1e-10, cfg);
}

SuiteResult norm_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 1);
  const std::size_t n = count_or(cfg, 10000);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Octonion a = rng.octonion(), b = rng.octonion();
    const double ab = a.norm() * b.norm();
    worst = std::max(worst, std::abs((a * b).norm() - ab) / ab);
  }
  return finish("norm_multiplicativity", n, worst, 1e-10, cfg);
}

SuiteResult scalar_product_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 2);
  const std::size_t n = count_or(cfg, 10000);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Octonion r = rng.octonion(), s = rng.octonion(), p = rng.octonion();
    const double scale = r.norm() * s.norm() * p.norm();
    worst = std::max(worst, std::abs(scalar_product(r * p, s) - scalar_product(r, s * p.conj())) / scale);
  }
  return finish("scalar_product_adjoint", n, worst, 1e-10, cfg);
}

std::pair<ImaginaryUnit, ImaginaryUnit> distinct_units(Rng& rng) {
  for (;;) {
    ImaginaryUnit J = rng.unit(), K = rng.unit();
    if ((J.value() - K.value()).norm() >= 1e-3) return {J, K};
  }
}

SuiteResult cjk_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 3);
  const std::size_t n = count_or(cfg, 100);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto [J, K] = distinct_units(rng);
    worst = std::max(worst, verify_cjk(J, K));
  }
  return finish("difference_inverse_identity", n, worst, 1e-10, cfg);
}

SuiteResult block_inverse_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 4);
  const std::size_t n = count_or(cfg, 100);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto [J, K] = distinct_units(rng);
    worst = std::max(worst, block_inverse_residual(J, K));
  }
  // K = -J: the upper-left block is exactly Identity / 2.
  double half = 0.0;
  for (int i = 1; i < 8; ++i) {
    const ImaginaryUnit J = ImaginaryUnit::basis(i);
    const Mat8 d = block_inverse(J, -J).a11.matrix() - 0.5 * Mat8::Identity();
    half = std::max(half, d.cwiseAbs().maxCoeff());
  }
  return finish("block_inverse", n + 7, std::max(worst, half), 1e-10, cfg,
                {{"random_pairs_max_residual", worst}, {"opposite_units_half_identity_residual", half}});
}

}  // namespace

std::vector<SuiteResult> run_verify_algebra(const SuiteConfig& cfg) {
  return {table_suite(cfg),  alternativity_suite(cfg), norm_suite(cfg),
          scalar_product_suite(cfg), cjk_suite(cfg),   block_inverse_suite(cfg)};
}

// ---------------------------------------------------------------------------
// verify-slice

namespace {

SuiteResult sliceness_suite(const SuiteConfig& cfg) {
  const std::size_t n = count_or(cfg, 200);
  double worst = 0.0;
  std::size_t cases = 0;
  nlohmann::json per = nlohmann::json::object();
  auto fs = slice_test_functions();
  if (cfg.inject_nonslice) fs.push_back({"e2 q1 (not slice)", 1, nonslice_test_function()});
  for (const auto& nf : fs) {
    const auto probes = make_probes(nf.dim, n, cfg.seed + 10);
    const double r = sliceness_residual(nf.f, probes);
    per[nf.name] = r;
    worst = std::max(worst, r);
    cases += probes.size();
  }
  return finish("sliceness", cases, worst, 1e-9, cfg, {{"per_function", per}});
}

SuiteResult representation_suite(const SuiteConfig& cfg) {
  const std::size_t n = count_or(cfg, 200);
  double worst = 0.0;
  std::size_t cases = 0;
  for (const auto& nf : slice_test_functions()) {
    for (const Probe& p : make_probes(nf.dim, n, cfg.seed + 11)) {
      const Octonion direct = nf.f(SlicePoint(p.x, p.y, p.I));
      for (const Octonion& v : {repr_matrix(nf.f, p.I, p.J, p.K, p.x, p.y),
                                repr_linear_I(nf.f, p.I, p.J, p.K, p.x, p.y),
                                repr_linear_f(nf.f, p.I, p.J, p.K, p.x, p.y),
                                repr_two_point(nf.f, p.I, p.J, p.x, p.y)})
        worst = std::max(worst, (v - direct).norm());
      ++cases;
    }
  }
  return finish("representation_forms", cases, worst, 1e-9, cfg);
}

SuiteResult stem_round_trip_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 12);
  const std::size_t n = count_or(cfg, 20);
  double worst = 0.0;
  std::size_t cases = 0;
  for (const auto& nf : slice_test_functions()) {
    const auto [J, K] = distinct_units(rng);
    const SliceFunction g = induced_function(stem_from_two_slices(nf.f, J, K));
    for (std::size_t k = 0; k < n; ++k) {
      const SlicePoint q(rng.vector(nf.dim, -1.0, 1.0), rng.vector(nf.dim, -1.0, 1.0), rng.unit());
      worst = std::max(worst, (g(q) - nf.f(q)).norm());
      ++cases;
    }
  }
  return finish("stem_round_trip", cases, worst, 1e-9, cfg);
}

SuiteResult stem_from_function_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 13);
  const std::size_t n = count_or(cfg, 100);
  double worst = 0.0;
  std::size_t cases = 0;
  for (const auto& nf : slice_test_functions()) {
    const SliceFunction g1 = induced_function(stem_from_function(nf.f, ImaginaryUnit::basis(1)));
    const SliceFunction g5 = induced_function(stem_from_function(nf.f, ImaginaryUnit::basis(5)));
    for (std::size_t k = 0; k < n; ++k) {
      const SlicePoint q(rng.vector(nf.dim, -1.0, 1.0), rng.vector(nf.dim, -1.0, 1.0), rng.unit());
      worst = std::max({worst, (g1(q) - g5(q)).norm(), (g1(q) - nf.f(q)).norm()});
      ++cases;
    }
  }
  return finish("stem_from_function", cases, worst, 1e-9, cfg);
}

SuiteResult splitting_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 14);
  const std::size_t n = count_or(cfg, 1000);
  std::vector<SBasis> bases{SBasis::make(ImaginaryUnit::basis(1), ImaginaryUnit::basis(2), ImaginaryUnit::basis(4))};
  while (bases.size() < 5) bases.push_back(complete_sbasis(rng.unit()));
  const SliceFunction f =
      complex_polynomial([](const ComplexVector& z) { return z[0] * z[0] * z[0] - z[0]; }, rng.octonion());
  double worst = 0.0;
  for (const SBasis& b : bases) {
    const SplitComponents s = split_components(f, b);
    for (std::size_t k = 0; k < n; ++k) {
      const SlicePoint z = SlicePoint::on_slice({{rng.uniform(-1, 1), rng.uniform(-1, 1)}}, b.I());
      worst = std::max(worst, (s.recompose(z) - f(z)).norm());
    }
  }
  return finish("splitting", n * bases.size(), worst, 1e-12, cfg);
}

SuiteResult weak_regularity_suite(const SuiteConfig& cfg) {
  const std::size_t n = count_or(cfg, 10);
  const SlicePoint p(RealVector{0.1}, RealVector{0.2}, ImaginaryUnit::basis(3));
  const SlicePolydisc disc(SlicePoint::real({0.0}), {1.0});
  struct Case {
    std::string name;
    SliceFunction f;
  };
  const std::vector<Case> cases{
      {"q^2", complex_polynomial([](const ComplexVector& z) { return z[0] * z[0]; }, Octonion(1.0))},
      {"q^3", complex_polynomial([](const ComplexVector& z) { return z[0] * z[0] * z[0]; }, Octonion(1.0))},
      {"(q - p)^{*2} e6", star_monomial(p, {2}, Octonion::basis(6))},
      {"(q - p)^{*3} e6", star_monomial(p, {3}, Octonion::basis(6))},
  };
  double worst = 0.0;
  std::size_t count = 0;
  nlohmann::json per = nlohmann::json::object();
  for (const auto& c : cases) {
    const RegularityReport rep = weak_regularity_report(c.f, region_of(disc, 1.0), 7, n, 1e-4, cfg.seed + 15);
    double lo = INFINITY, hi = 0.0;
    for (const auto& r : rep.records)
      if (r.ratio) lo = std::min(lo, *r.ratio), hi = std::max(hi, *r.ratio);
    per[c.name] = {{"max_residual", rep.max_residual},
                   {"min_ratio", std::isfinite(lo) ? nlohmann::json(lo) : nlohmann::json(nullptr)},
                   {"max_ratio", hi > 0.0 ? nlohmann::json(hi) : nlohmann::json(nullptr)}};
    worst = std::max(worst, rep.max_residual);
    count += rep.records.size();
  }
  return finish("weak_regularity", count, worst, 1e-6, cfg, {{"per_function", per}});
}

SuiteResult strong_regularity_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 16);
  const std::size_t n = count_or(cfg, 50);
  double worst = 0.0;
  std::size_t cases = 0;
  for (const auto& nf : slice_test_functions()) {
    const StemFunction F = stem_from_function(nf.f, ImaginaryUnit::basis(1));
    for (std::size_t k = 0; k < n; ++k) {
      const RealVector x = rng.vector(nf.dim, -1.0, 1.0), y = rng.vector(nf.dim, -1.0, 1.0);
      worst = std::max(worst, stem_cr_residual(F, x, y, 1e-4, false).max_residual());
      ++cases;
    }
  }
  return finish("strong_regularity", cases, worst, 1e-6, cfg);
}

SuiteResult derivative_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 17);
  const std::size_t n = count_or(cfg, 20);
  const SliceFunction f = complex_polynomial([](const ComplexVector& z) { return z[0] * z[0] * z[0]; }, Octonion(1.0));
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const ImaginaryUnit I = rng.unit();
    const SlicePoint z = SlicePoint::on_slice({{rng.uniform(-1, 1), rng.uniform(-1, 1)}}, I);
    const Octonion a = slice_derivative_l(f, 0, z, 1e-4);
    const Octonion b = slice_derivative_Il(f, I, 0, z, 1e-4);
    const Octonion c = slice_derivative_Il(f, -I, 0, z, 1e-4);
    worst = std::max({worst, (a - b).norm(), (b - c).norm()});
  }
  return finish("slice_derivatives", n, worst, 1e-6, cfg);
}

}  // namespace

std::vector<SuiteResult> run_verify_slice(const SuiteConfig& cfg) {
  return {sliceness_suite(cfg),          representation_suite(cfg),    stem_round_trip_suite(cfg),
          stem_from_function_suite(cfg), splitting_suite(cfg),         weak_regularity_suite(cfg),
          strong_regularity_suite(cfg),  derivative_suite(cfg)};
}

// ---------------------------------------------------------------------------
// taylor-demo

namespace {

// Uniform point of the axially symmetric polydisc around `disc`, with a random
// unit.
SlicePoint sample_polydisc(Rng& rng, const SlicePolydisc& disc) {
  for (;;) {
    RealVector x(disc.center.dim()), y(disc.center.dim());
    const ComplexVector c = disc.center.slice_coords(disc.center.unit());
    for (std::size_t l = 0; l < x.size(); ++l) {
      const double r = disc.radius[l] * std::sqrt(rng.uniform());
      const double t = rng.uniform(0.0, 2.0 * pi);
      x[l] = c[l].real() + r * std::cos(t);
      y[l] = c[l].imag() + r * std::sin(t);
    }
    SlicePoint q(x, y, rng.unit());
    if (polydisc_contains(disc, q)) return q;
  }
}

SuiteResult reconstruction_suite(const std::string& name, const SliceFunction& f, const SlicePolydisc& disc,
                                 int degree, double h, std::size_t samples, std::uint64_t seed,
                                 const SuiteConfig& cfg) {
  const StarSeries s = taylor_coeffs(f, disc.center, degree, h);
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const SlicePoint q = sample_polydisc(rng, disc);
    worst = std::max(worst, (series_eval(s, q) - f(q)).norm());
  }
  return finish(name, samples, worst, 1e-9, cfg, {{"center", to_json(disc.center)}, {"degree", degree}});
}

SuiteResult exponential_suite(const SuiteConfig& cfg) {
  StarSeries s{SlicePoint::real({0.0}), {}, 20, FactorialConvention::divide};
  for (int k = 0; k <= 20; ++k) s.coeffs.emplace(MultiIndex({k}), Octonion(1.0));
  const Octonion got = series_eval(s, SlicePoint(RealVector{0.0}, RealVector{1.0}, ImaginaryUnit::basis(1)));
  const Octonion expected = Octonion(std::cos(1.0)) + std::sin(1.0) * Octonion::basis(1);
  return finish("star_exponential", 1, (got - expected).norm(), 1e-9, cfg, {{"value", got}, {"expected", expected}});
}

double violation(double lower, double value, double upper) {
  return std::max({0.0, lower - value, value - upper});
}

SuiteResult mk_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 20);
  const std::size_t n = count_or(cfg, 10000);
  double worst = 0.0;
  std::size_t failures = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Octonion r = rng.octonion();
    const ImaginaryUnit I = rng.unit(), J = rng.unit();
    const Octonion w = Octonion(rng.normal()) + rng.normal() * I.value();
    const Octonion s = (inv(r) * w).conj();
    const MkBound b = bound_check_mk(r, s, I, J);
    if (!b.holds) ++failures;
    worst = std::max({worst, violation(b.lower, b.value, b.upper), b.rjs_residual});
  }
  const MkBound ex = bound_check_mk(Octonion(1.0), Octonion(1.0) + Octonion::basis(1), ImaginaryUnit::basis(1),
                                    ImaginaryUnit::basis(2));
  const double ex_err = std::max({std::abs(ex.lower - 1.0), std::abs(ex.value - std::sqrt(3.0)),
                                  std::abs(ex.upper - std::sqrt(5.0))});
  return finish("modulus_bound_mk", n + 1, std::max(worst, ex_err), 1e-12, cfg,
                {{"failures", failures},
                 {"worked_example", {{"lower", ex.lower}, {"value", ex.value}, {"upper", ex.upper}}}});
}

SuiteResult mlq_suite(const SuiteConfig& cfg) {
  Rng rng(cfg.seed + 21);
  const std::size_t n = count_or(cfg, 1000);
  double worst = 0.0;
  std::size_t failures = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t dim = 1 + k % 2;
    const ImaginaryUnit I = rng.unit();
    const SlicePoint p(rng.vector(dim, -1, 1), rng.vector(dim, -1, 1), I);
    const SlicePoint q(rng.vector(dim, -1, 1), rng.vector(dim, -1, 1), rng.unit());
    std::vector<int> alpha(dim, 0);
    const int order = static_cast<int>(rng.uniform(0.0, 5.0));
    for (int j = 0; j < order; ++j) ++alpha[static_cast<std::size_t>(rng.uniform(0.0, static_cast<double>(dim)))];
    const MlqBound b = bound_check_mlq(p, q, MultiIndex(alpha), rng.octonion());
    if (!b.holds) ++failures;
    worst = std::max(worst, violation(b.lower, b.value, b.upper) / std::max(1.0, b.upper));
  }
  return finish("modulus_bound_mlq", n, worst, 1e-12, cfg, {{"failures", failures}});
}

}  // namespace

std::vector<SuiteResult> run_taylor_demo(const SuiteConfig& cfg) {
  const std::size_t samples = count_or(cfg, 200);
  const Octonion one(1.0);
  const SliceFunction square = complex_polynomial([](const ComplexVector& z) { return z[0] * z[0]; }, one);
  const SliceFunction quartic = complex_polynomial(
      [](const ComplexVector& z) { return z[0] * z[0] * z[0] * z[0] - 2.0 * z[0] * z[1] * z[1] * z[1] + z[1] * z[1] - 1.0; },
      Octonion::basis(3) + Octonion(0.5));
  const ImaginaryUnit I = ImaginaryUnit::basis(6);
  const SlicePoint p_star(RealVector{0.2, -0.3}, RealVector{0.3, 0.2}, I);
  const SliceFunction monomial = star_monomial(p_star, {1, 2}, Octonion::basis(2) - Octonion::basis(7));

  std::vector<SuiteResult> out;
  out.push_back(reconstruction_suite("taylor_q_squared", square,
                                     SlicePolydisc(SlicePoint::real({0.25}), {1.0}), 2, 0.1, samples,
                                     cfg.seed + 30, cfg));
  out.push_back(reconstruction_suite(
      "taylor_quartic", quartic,
      SlicePolydisc(SlicePoint(RealVector{0.1, -0.2}, RealVector{0.1, 0.05}, I), {0.6, 0.6}), 4, 0.1, samples,
      cfg.seed + 31, cfg));
  out.push_back(reconstruction_suite(
      "taylor_star_monomial", monomial,
      SlicePolydisc(SlicePoint(RealVector{0.0, 0.1}, RealVector{0.1, 0.0}, I), {0.5, 0.5}), 3, 0.1, samples,
      cfg.seed + 32, cfg));
  out.push_back(exponential_suite(cfg));
  out.push_back(mk_suite(cfg));
  out.push_back(mlq_suite(cfg));
  return out;
}

// ---------------------------------------------------------------------------
// sqrt-example

std::vector<SuiteResult> run_sqrt_example(const SuiteConfig& cfg) {
  const ImaginaryUnit I = ImaginaryUnit::basis(1), J = ImaginaryUnit::basis(2);
  const WeakSqrtExtension ext(1, I, J);
  const double r2 = std::sqrt(2.0);
  const Octonion one(1.0);
  struct Row {
    std::string point;
    SlicePoint q;
    Octonion expected;
  };
  const std::vector<Row> rows{
      {"theta1", SlicePoint::real({1.0}), one},
      {"theta1 J", SlicePoint({0.0}, {1.0}, J), (-one - J.value()) / r2},
      {"-theta1 J", SlicePoint({0.0}, {-1.0}, J), (one - J.value()) / r2},
      {"theta1 I", SlicePoint({0.0}, {1.0}, I), (one + I.value()) / r2},
      {"-theta1", SlicePoint::real({-1.0}), -J.value()},
  };
  nlohmann::json table = nlohmann::json::array();
  double worst = 0.0;
  for (const Row& r : rows) {
    const Octonion v = ext(r.q);
    const double err = (v - r.expected).norm();
    worst = std::max(worst, err);
    table.push_back({{"point", r.point}, {"q", to_json(r.q)}, {"value", v}, {"expected", r.expected}, {"error", err}});
  }

  const NotSliceReport ns = verify_not_slice(I, J);
  const double ns_err = std::abs(ns.residual - r2);

  const RegularityReport reg =
      weak_regularity_report(ext.as_function(), region_of(ext.domain(), 1, 1.6), 7, count_or(cfg, 20), 1e-4, cfg.seed + 40);

  return {finish("sqrt_values", rows.size(), worst, 1e-9, cfg, {{"I", I.value()}, {"J", J.value()}, {"values", table}}),
          finish("not_slice", 1, ns_err, 1e-9, cfg, {{"report", to_json(ns)}, {"expected_residual", r2}}),
          finish("sqrt_weak_regularity", reg.records.size(), reg.max_residual, 1e-6, cfg)};
}

}  // namespace octslice
