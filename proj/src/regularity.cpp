#include "octslice/regularity.hpp"

#include <algorithm>
#include <cmath>

#include "octslice/sampling.hpp"

namespace octslice {

double CRReport::max_residual() const {
  double m = 0.0;
  for (double r : residual) m = std::max(m, r);
  return m;
}

namespace {

void require_step(double h) {
  if (!(h > 0.0)) throw DomainError("step h must be positive");
}

SlicePoint shifted(const ComplexVector& z, std::size_t m, std::complex<double> delta, const ImaginaryUnit& I) {
  ComplexVector w = z;
  w[m] += delta;
  return SlicePoint::on_slice(w, I);
}

// Central differences of f along x_m and y_m on C_I.
std::pair<Octonion, Octonion> slice_gradient(const SliceFunction& f, const ImaginaryUnit& I,
                                             const ComplexVector& z, std::size_t m, double h) {
  const Octonion dx = (f(shifted(z, m, {h, 0.0}, I)) - f(shifted(z, m, {-h, 0.0}, I))) / (2.0 * h);
  const Octonion dy = (f(shifted(z, m, {0.0, h}, I)) - f(shifted(z, m, {0.0, -h}, I))) / (2.0 * h);
  return {dx, dy};
}

std::vector<double> slice_cr_once(const SliceFunction& f, const ImaginaryUnit& I, const ComplexVector& z,
                                  double h) {
  std::vector<double> out(z.size());
  for (std::size_t m = 0; m < z.size(); ++m) {
    const auto [dx, dy] = slice_gradient(f, I, z, m, h);
    out[m] = (0.5 * (dx + I.value() * dy)).norm();
  }
  return out;
}

std::vector<double> stem_cr_once(const StemFunction& F, std::span<const double> x, std::span<const double> y,
                                 double h) {
  const std::size_t n = x.size();
  std::vector<double> out(n);
  RealVector xs(x.begin(), x.end()), ys(y.begin(), y.end());
  for (std::size_t m = 0; m < n; ++m) {
    auto eval_x = [&](double d) {
      RealVector xx = xs;
      xx[m] += d;
      return F(xx, ys);
    };
    auto eval_y = [&](double d) {
      RealVector yy = ys;
      yy[m] += d;
      return F(xs, yy);
    };
    const StemValue xp = eval_x(h), xm = eval_x(-h), yp = eval_y(h), ym = eval_y(-h);
    const Octonion dx1 = (xp.f1 - xm.f1) / (2.0 * h), dx2 = (xp.f2 - xm.f2) / (2.0 * h);
    const Octonion dy1 = (yp.f1 - ym.f1) / (2.0 * h), dy2 = (yp.f2 - ym.f2) / (2.0 * h);
    const Octonion c1 = 0.5 * (dx1 - dy2);
    const Octonion c2 = 0.5 * (dx2 + dy1);
    out[m] = std::sqrt(c1.norm2() + c2.norm2());
  }
  return out;
}

std::optional<double> ratio_of(const std::vector<double>& coarse, const std::vector<double>& fine) {
  const double c = *std::max_element(coarse.begin(), coarse.end());
  const double f = *std::max_element(fine.begin(), fine.end());
  if (f == 0.0) return std::nullopt;
  return c / f;
}

}  // namespace

CRReport cr_residual_slice(const SliceFunction& f, const ImaginaryUnit& I, const SlicePoint& z, double h,
                           bool with_ratio) {
  require_step(h);
  const ComplexVector zc = z.slice_coords(I);
  CRReport r;
  r.h = h;
  r.residual = slice_cr_once(f, I, zc, h);
  if (with_ratio && !zc.empty()) r.ratio = ratio_of(r.residual, slice_cr_once(f, I, zc, h / 2.0));
  return r;
}

CRReport stem_cr_residual(const StemFunction& F, std::span<const double> x, std::span<const double> y, double h,
                          bool with_ratio) {
  require_step(h);
  if (x.size() != y.size()) throw std::invalid_argument("x and y must have equal dimension");
  CRReport r;
  r.h = h;
  r.residual = stem_cr_once(F, x, y, h);
  if (with_ratio && !x.empty()) r.ratio = ratio_of(r.residual, stem_cr_once(F, x, y, h / 2.0));
  return r;
}

std::array<std::complex<double>, 4> split_value(const Octonion& v, const SBasis& basis) {
  const Vec8 c = basis.product_matrix().partialPivLu().solve(to_vec(v));
  return {{{c(0), c(1)}, {c(2), c(3)}, {c(4), c(5)}, {c(6), c(7)}}};
}

Octonion recompose_value(const std::array<std::complex<double>, 4>& parts, const SBasis& basis) {
  const auto& p = basis.products();
  Octonion out;
  for (std::size_t k = 0; k < 4; ++k) out += parts[k].real() * p[2 * k] + parts[k].imag() * p[2 * k + 1];
  return out;
}

Octonion SplitComponents::recompose(const SlicePoint& z) const {
  const Octonion& j = basis.J().value();
  const Octonion& k = basis.K().value();
  return F[0](z) + F[1](z) * j + F[2](z) * k + F[3](z) * (j * k);
}

SplitComponents split_components(SliceFunction f, const SBasis& basis) {
  SplitComponents s{basis, {}};
  auto shared = std::make_shared<const SliceFunction>(std::move(f));
  for (std::size_t k = 0; k < 4; ++k) {
    s.F[k] = [shared, basis, k](const SlicePoint& z) {
      if (!z.on_slice_of(basis.I())) throw DomainError("split components live on the slice C_I");
      const auto c = split_value((*shared)(z), basis)[k];
      return Octonion(c.real()) + c.imag() * basis.I().value();
    };
  }
  return s;
}

Octonion slice_derivative_Il(const SliceFunction& f, const ImaginaryUnit& I, std::size_t l, const SlicePoint& z,
                             double h) {
  require_step(h);
  const ComplexVector zc = z.slice_coords(I);
  if (l >= zc.size()) throw std::out_of_range("variable index out of range");
  const auto [dx, dy] = slice_gradient(f, I, zc, l, h);
  return 0.5 * (dx - I.value() * dy);
}

Octonion slice_derivative_l(const SliceFunction& f, std::size_t l, const SlicePoint& q, double h) {
  require_step(h);
  if (l >= q.dim()) throw std::out_of_range("variable index out of range");
  RealVector xp = q.x(), xm = q.x();
  xp[l] += h;
  xm[l] -= h;
  return (f(SlicePoint(xp, q.y(), q.unit())) - f(SlicePoint(xm, q.y(), q.unit()))) / (2.0 * h);
}

nlohmann::json to_json(const RegularityRecord& r) {
  nlohmann::json j{{"point", to_json(r.point)}, {"unit", r.unit.value()}, {"variable", r.variable},
                   {"h", r.h},                  {"residual", r.residual}};
  j["ratio"] = r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const CRReport& r) {
  nlohmann::json j{{"h", r.h}, {"residual", r.residual}};
  j["ratio"] = r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const RegularityReport& r) {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& rec : r.records) recs.push_back(to_json(rec));
  return {{"max_residual", r.max_residual}, {"records", recs}};
}

SampleRegion region_of(const DomainSpec& omega, std::size_t dim, double box) {
  return {dim, [omega](const SlicePoint& q) { return domain_contains(omega, q); }, box};
}

SampleRegion region_of(const SlicePolydisc& p, double box) {
  return {p.center.dim(), [p](const SlicePoint& q) { return polydisc_contains(p, q); }, box};
}

namespace {

bool stencil_inside(const SampleRegion& region, const ComplexVector& z, const ImaginaryUnit& I, double h) {
  if (!region.contains(SlicePoint::on_slice(z, I))) return false;
  for (double step : {h, h / 2.0})
    for (std::size_t m = 0; m < z.size(); ++m)
      for (std::complex<double> d : {std::complex<double>{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}})
        if (!region.contains(shifted(z, m, d, I))) return false;
  return true;
}

}  // namespace

RegularityReport weak_regularity_report(const SliceFunction& f, const SampleRegion& region, std::size_t units,
                                        std::size_t probes, double h, std::uint64_t seed) {
  require_step(h);
  Rng rng(seed);
  RegularityReport report;
  for (const ImaginaryUnit& I : unit_sweep(units)) {
    std::size_t placed = 0, attempts = 0;
    while (placed < probes && attempts < 1000 * probes) {
      ++attempts;
      ComplexVector z(region.dim);
      for (auto& w : z) w = {rng.uniform(-region.box, region.box), rng.uniform(-region.box, region.box)};
      if (!stencil_inside(region, z, I, h)) continue;
      ++placed;
      const SlicePoint point = SlicePoint::on_slice(z, I);
      const CRReport cr = cr_residual_slice(f, I, point, h);
      for (std::size_t m = 0; m < cr.residual.size(); ++m) {
        report.records.push_back({point, I, m, h, cr.residual[m], cr.ratio});
        report.max_residual = std::max(report.max_residual, cr.residual[m]);
      }
    }
  }
  return report;
}

}  // namespace octslice
