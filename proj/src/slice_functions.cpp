#include "octslice/slice_functions.hpp"

#include <algorithm>

#include "octslice/sampling.hpp"

namespace octslice {

StemValue StemFunction::operator()(std::span<const double> x, std::span<const double> y) const {
  if (domain && !domain(x, y)) throw DomainError("point outside stem domain");
  return eval(x, y);
}

Octonion SliceFunction::operator()(const SlicePoint& q) const {
  if (!contains(q)) throw DomainError("point outside function domain");
  return eval(q);
}

SliceFunction with_domain(SliceFunction f, DomainSpec omega) {
  f.domain = [omega = std::move(omega)](const SlicePoint& q) { return domain_contains(omega, q); };
  return f;
}

Octonion eval_from_stem(const StemFunction& F, const SlicePoint& q) {
  const StemValue v = F(q.x(), q.y());
  return v.f1 + q.unit().value() * v.f2;
}

SliceFunction induced_function(StemFunction F) {
  SliceFunction f;
  f.eval = [F](const SlicePoint& q) { return eval_from_stem(F, q); };
  if (F.domain)
    f.domain = [F](const SlicePoint& q) { return F.domain(q.x(), q.y()); };
  return f;
}

namespace {

SlicePoint at(std::span<const double> x, std::span<const double> y, const ImaginaryUnit& u) {
  return SlicePoint(RealVector(x.begin(), x.end()), RealVector(y.begin(), y.end()), u);
}

SlicePoint at_reflected(std::span<const double> x, std::span<const double> y, const ImaginaryUnit& u) {
  RealVector ny(y.begin(), y.end());
  for (double& v : ny) v = -v;
  return SlicePoint(RealVector(x.begin(), x.end()), std::move(ny), u);
}

void require_distinct(const ImaginaryUnit& J, const ImaginaryUnit& K) {
  if (J == K) throw DomainError("units must differ");
}

}  // namespace

StemFunction stem_from_two_slices(SliceFunction f, const ImaginaryUnit& J, const ImaginaryUnit& K) {
  require_distinct(J, K);
  const BlockOperator2 inverse = block_inverse(J, K);
  StemFunction F;
  F.eval = [f = std::move(f), inverse, J, K](std::span<const double> x, std::span<const double> y) {
    const auto col = inverse.apply(f(at(x, y, J)), f(at(x, y, K)));
    return StemValue{col[0], col[1]};
  };
  return F;
}

Octonion repr_matrix(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                     const ImaginaryUnit& K, std::span<const double> x, std::span<const double> y) {
  require_distinct(J, K);
  const auto col = block_inverse(J, K).apply(f(at(x, y, J)), f(at(x, y, K)));
  return col[0] + left_mult_matrix(I)(col[1]);
}

Octonion repr_linear_I(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                       const ImaginaryUnit& K, std::span<const double> x, std::span<const double> y) {
  require_distinct(J, K);
  const Octonion fj = f(at(x, y, J));
  const Octonion fk = f(at(x, y, K));
  const Octonion d = inv(J.value() - K.value());
  return d * (J.value() * fj - K.value() * fk) + I.value() * (d * (fj - fk));
}

Octonion repr_linear_f(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                       const ImaginaryUnit& K, std::span<const double> x, std::span<const double> y) {
  require_distinct(J, K);
  const Octonion fj = f(at(x, y, J));
  const Octonion fk = f(at(x, y, K));
  const Octonion& i = I.value();
  const Octonion& j = J.value();
  const Octonion& k = K.value();
  return (i - k) * (inv(j - k) * fj) + (i - j) * (inv(k - j) * fk);
}

Octonion repr_two_point(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                        std::span<const double> x, std::span<const double> y) {
  const Octonion fp = f(at(x, y, J));
  const Octonion fm = f(at_reflected(x, y, J));
  return 0.5 * (fp + fm) - 0.5 * (I.value() * (J.value() * (fp - fm)));
}

namespace {

Probe draw_probe(Rng& rng, std::size_t n, double box) {
  for (;;) {
    RealVector x = rng.vector(n, -box, box);
    RealVector y = rng.vector(n, -box, box);
    const ImaginaryUnit I = rng.unit();
    const ImaginaryUnit J = rng.unit();
    const ImaginaryUnit K = rng.unit();
    if ((J.value() - K.value()).norm() >= 1e-3) return {std::move(x), std::move(y), I, J, K};
  }
}

}  // namespace

std::vector<Probe> make_probes(std::size_t n, std::size_t count, std::uint64_t seed, double box) {
  Rng rng(seed);
  std::vector<Probe> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(draw_probe(rng, n, box));
  return out;
}

std::vector<Probe> make_probes_in(const SliceFunction& f, std::size_t n, std::size_t count,
                                  std::uint64_t seed, double box) {
  Rng rng(seed);
  std::vector<Probe> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 1000 * count + 1000) throw DomainError("could not place probes inside the domain");
    Probe p = draw_probe(rng, n, box);
    if (f.contains(at(p.x, p.y, p.I)) && f.contains(at(p.x, p.y, p.J)) && f.contains(at(p.x, p.y, p.K)))
      out.push_back(std::move(p));
  }
  return out;
}

nlohmann::json to_json(const Probe& p) {
  return {{"x", p.x}, {"y", p.y}, {"I", p.I.value()}, {"J", p.J.value()}, {"K", p.K.value()}};
}

nlohmann::json to_json(const ProbeRecord& r) {
  return {{"probe", to_json(r.probe)}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", r.residual}};
}

std::vector<ProbeRecord> sliceness_records(const SliceFunction& f, std::span<const Probe> probes) {
  std::vector<ProbeRecord> out;
  out.reserve(probes.size());
  for (const Probe& p : probes) {
    const Octonion lhs = f(at(p.x, p.y, p.I));
    const Octonion rhs = repr_matrix(f, p.I, p.J, p.K, p.x, p.y);
    out.push_back({p, lhs, rhs, (lhs - rhs).norm()});
  }
  return out;
}

double sliceness_residual(const SliceFunction& f, std::span<const Probe> probes) {
  double m = 0.0;
  for (const auto& r : sliceness_records(f, probes)) m = std::max(m, r.residual);
  return m;
}

StemFunction stem_from_function(SliceFunction f, const ImaginaryUnit& I) {
  StemFunction F;
  F.eval = [f = std::move(f), I](std::span<const double> u, std::span<const double> v) {
    const Octonion fp = f(at(u, v, I));
    const Octonion fm = f(at_reflected(u, v, I));
    return StemValue{0.5 * (fp + fm), -0.5 * (I.value() * (fp - fm))};
  };
  return F;
}

IntrinsicStem stem_to_intrinsic(StemFunction F) {
  return [F = std::move(F)](std::span<const double> x, std::span<const double> y) {
    if (is_positive(y) != Sign::negative) return F(x, y);
    RealVector ny(y.begin(), y.end());
    for (double& v : ny) v = -v;
    const StemValue s = F(x, ny);
    return StemValue{s.f1, -s.f2};
  };
}

}  // namespace octslice
