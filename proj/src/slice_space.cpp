#include "octslice/slice_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "octslice/sampling.hpp"

namespace octslice {

Sign is_positive(std::span<const double> y) {
  for (double v : y) {
    if (v > 0.0) return Sign::positive;
    if (v < 0.0) return Sign::negative;
  }
  return Sign::zero;
}

ImaginaryUnit default_unit() { return ImaginaryUnit::basis(1); }

SlicePoint::SlicePoint(RealVector x, RealVector y, const ImaginaryUnit& unit)
    : x_(std::move(x)), y_(std::move(y)), unit_(unit) {
  if (x_.size() != y_.size()) throw std::invalid_argument("x and y must have equal dimension");
  switch (is_positive(y_)) {
    case Sign::positive:
      break;
    case Sign::zero:
      std::fill(y_.begin(), y_.end(), 0.0);  // folds -0.0 into 0.0
      unit_ = default_unit();
      break;
    case Sign::negative:
      for (double& v : y_) v = -v;
      unit_ = -unit_;
      break;
  }
}

SlicePoint SlicePoint::real(RealVector x) {
  RealVector y(x.size(), 0.0);
  return SlicePoint(std::move(x), std::move(y), default_unit());
}

SlicePoint SlicePoint::on_slice(const ComplexVector& z, const ImaginaryUnit& unit) {
  RealVector x(z.size()), y(z.size());
  for (std::size_t l = 0; l < z.size(); ++l) {
    x[l] = z[l].real();
    y[l] = z[l].imag();
  }
  return SlicePoint(std::move(x), std::move(y), unit);
}

bool SlicePoint::is_real() const { return is_positive(y_) == Sign::zero; }

std::vector<Octonion> SlicePoint::to_octonions() const {
  std::vector<Octonion> out(dim());
  for (std::size_t l = 0; l < dim(); ++l) out[l] = Octonion(x_[l]) + y_[l] * unit_.value();
  return out;
}

bool SlicePoint::on_slice_of(const ImaginaryUnit& unit, double tol) const {
  return is_real() || same_unit(unit_, unit, tol) || same_unit(unit_, -unit, tol);
}

ComplexVector SlicePoint::slice_coords(const ImaginaryUnit& unit, double tol) const {
  double sign = 1.0;
  if (!is_real()) {
    if (same_unit(unit_, unit, tol))
      sign = 1.0;
    else if (same_unit(unit_, -unit, tol))
      sign = -1.0;
    else
      throw DomainError("point does not lie on the requested slice");
  }
  ComplexVector z(dim());
  for (std::size_t l = 0; l < dim(); ++l) z[l] = {x_[l], sign * y_[l]};
  return z;
}

SlicePoint canonicalize(RealVector x, RealVector y, const ImaginaryUnit& unit) {
  return SlicePoint(std::move(x), std::move(y), unit);
}

double distance(const SlicePoint& a, const SlicePoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  const auto qa = a.to_octonions();
  const auto qb = b.to_octonions();
  double s = 0.0;
  for (std::size_t l = 0; l < qa.size(); ++l) s += (qa[l] - qb[l]).norm2();
  return std::sqrt(s);
}

std::vector<SlicePoint> axial_orbit(const SlicePoint& q, std::size_t m) {
  if (m == 0) throw std::invalid_argument("orbit size must be at least 1");
  std::vector<SlicePoint> out{q};
  if (q.is_real()) {
    out.resize(m, q);
    return out;
  }
  for (const ImaginaryUnit& u : unit_sweep(m + 2)) {
    if (out.size() == m) break;
    if (same_unit(u, q.unit()) || same_unit(u, -q.unit())) continue;
    out.emplace_back(q.x(), q.y(), u);
  }
  return out;
}

SlicePolydisc::SlicePolydisc(SlicePoint c, RealVector r) : center(std::move(c)), radius(std::move(r)) {
  if (radius.size() != center.dim()) throw std::invalid_argument("radius dimension mismatch");
  for (double v : radius)
    if (!(v > 0.0)) throw std::invalid_argument("polydisc radii must be positive");
}

bool polydisc_contains(const SlicePolydisc& p, const SlicePoint& q) {
  if (p.center.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
  const ComplexVector c = p.center.slice_coords(p.center.unit());
  for (std::size_t l = 0; l < q.dim(); ++l) {
    const std::complex<double> plus{q.x()[l], q.y()[l]};
    if (std::abs(c[l] - plus) > p.radius[l] || std::abs(c[l] - std::conj(plus)) > p.radius[l])
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// PlanarPath

PlanarPath::PlanarPath(std::vector<std::complex<double>> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("path needs at least one vertex");
}

PlanarPath PlanarPath::arc(const Arc& a, double samples_per_length) {
  return arcs({a}, samples_per_length);
}

PlanarPath PlanarPath::arcs(const std::vector<Arc>& parts, double samples_per_length) {
  if (parts.empty()) throw std::invalid_argument("path needs at least one arc");
  if (!(samples_per_length > 0.0)) throw std::invalid_argument("sample density must be positive");
  std::vector<std::complex<double>> v;
  for (const Arc& a : parts) {
    const double length = std::abs(a.to - a.from) * a.radius;
    const auto segments = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(length * samples_per_length)));
    for (std::size_t k = v.empty() ? 0 : 1; k <= segments; ++k) {
      const double t = a.from + (a.to - a.from) * static_cast<double>(k) / static_cast<double>(segments);
      v.push_back(a.center + std::polar(a.radius, t));
    }
  }
  PlanarPath p(std::move(v));
  p.arcs_ = parts;
  p.density_ = samples_per_length;
  return p;
}

PlanarPath PlanarPath::conjugated() const {
  if (!arcs_.empty()) {
    std::vector<Arc> parts;
    for (const Arc& a : arcs_) parts.push_back({std::conj(a.center), a.radius, -a.from, -a.to});
    return arcs(parts, density_);
  }
  std::vector<std::complex<double>> v;
  for (auto w : vertices_) v.push_back(std::conj(w));
  return PlanarPath(std::move(v));
}

PlanarPath PlanarPath::refined(double factor) const {
  if (arcs_.empty()) return *this;
  return arcs(arcs_, density_ * factor);
}

double PlanarPath::chord_error() const {
  double e = 0.0;
  for (const Arc& a : arcs_) {
    const double length = std::abs(a.to - a.from) * a.radius;
    const double segments = std::max(1.0, std::ceil(length * density_));
    const double dphi = std::abs(a.to - a.from) / segments;
    e = std::max(e, a.radius * (1.0 - std::cos(dphi / 2.0)));
  }
  return e;
}

namespace {

double segment_distance(std::complex<double> w, std::complex<double> a, std::complex<double> b) {
  const std::complex<double> ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(w - a);
  const double t = std::clamp(((w - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(w - (a + t * ab));
}

}  // namespace

double PlanarPath::distance(std::complex<double> w) const {
  if (vertices_.size() == 1) return std::abs(w - vertices_.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < vertices_.size(); ++k)
    best = std::min(best, segment_distance(w, vertices_[k], vertices_[k + 1]));
  return best;
}

std::size_t PlanarPath::nearest_vertex(std::complex<double> w) const {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const double d = std::norm(w - vertices_[k]);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Regions

bool region_contains(const BallRegion& b, const SlicePoint& q) { return distance(b.center, q) < b.radius; }

double tube_distance(const TubeRegion& t, const ComplexVector& z) {
  double rest = 0.0;
  for (std::size_t l = 1; l < z.size(); ++l) rest += std::norm(z[l]);
  const std::complex<double> w = t.conjugate ? std::conj(z.front()) : z.front();

  PlanarPath path = t.path;
  double d = 0.0;
  for (int round = 0; round < 4; ++round) {
    d = std::sqrt(std::pow(path.distance(w), 2) + rest);
    // Polyline and arc differ by at most the chord error; stop once that
    // cannot flip the strict comparison.
    if (std::abs(d - t.radius) > path.chord_error()) break;
    path = path.refined(10.0);
  }
  return d;
}

bool region_contains(const TubeRegion& t, const SlicePoint& q) {
  if (!q.on_slice_of(t.unit)) return false;
  return tube_distance(t, q.slice_coords(t.unit)) < t.radius;
}

bool domain_contains(const DomainSpec& omega, const SlicePoint& q) {
  return std::any_of(omega.primitives.begin(), omega.primitives.end(), [&](const DomainPrimitive& p) {
    return std::visit([&](const auto& r) { return region_contains(r, q); }, p);
  });
}

DomainSpec sqrt_example_domain(std::size_t n, const ImaginaryUnit& I, const ImaginaryUnit& J) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  if (same_unit(I, J) || same_unit(I, -J)) throw DomainError("J must differ from +-I");
  constexpr double pi = std::numbers::pi;
  const PlanarPath alpha = PlanarPath::arc({0.0, 1.0, 0.0, pi / 2});
  const PlanarPath beta = PlanarPath::arc({0.0, 1.0, pi / 2, pi});
  RealVector th1(n, 0.0);
  th1[0] = 1.0;
  RealVector minus_th1 = th1;
  minus_th1[0] = -1.0;

  DomainSpec d;
  d.primitives.emplace_back(BallRegion{SlicePoint::real(th1), 0.5});
  d.primitives.emplace_back(BallRegion{SlicePoint::real(minus_th1), 0.5});
  d.primitives.emplace_back(TubeRegion{J, alpha, 0.5, true});   // U'
  d.primitives.emplace_back(TubeRegion{J, beta, 0.5, true});    // V'
  d.primitives.emplace_back(TubeRegion{J, beta, 0.5, false});   // V
  d.primitives.emplace_back(TubeRegion{I, alpha, 0.5, false});  // U
  return d;
}

// ---------------------------------------------------------------------------
// JSON

void to_json(nlohmann::json& j, const Octonion& q) { j = q.coeffs(); }

void from_json(const nlohmann::json& j, Octonion& q) {
  if (!j.is_array() || j.size() != 8) throw std::invalid_argument("octonion must be an array of 8 numbers");
  q = Octonion(j.get<std::array<double, 8>>());
}

nlohmann::json to_json(const SlicePoint& p) {
  return {{"x", p.x()}, {"y", p.y()}, {"I", p.unit().value()}};
}

SlicePoint slice_point_from_json(const nlohmann::json& j) {
  return SlicePoint(j.at("x").get<RealVector>(), j.at("y").get<RealVector>(),
                    ImaginaryUnit(j.at("I").get<Octonion>()));
}

namespace {

nlohmann::json path_to_json(const PlanarPath& p) {
  if (!p.arc_parts().empty()) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& a : p.arc_parts())
      arcs.push_back({{"center", {a.center.real(), a.center.imag()}},
                      {"radius", a.radius},
                      {"from", a.from},
                      {"to", a.to}});
    return {{"arcs", arcs}, {"samples_per_length", p.samples_per_length()}};
  }
  nlohmann::json v = nlohmann::json::array();
  for (auto w : p.vertices()) v.push_back({w.real(), w.imag()});
  return {{"vertices", v}};
}

std::complex<double> complex_from_json(const nlohmann::json& j) {
  const auto a = j.get<std::array<double, 2>>();
  return {a[0], a[1]};
}

PlanarPath path_from_json(const nlohmann::json& j) {
  if (j.contains("arcs")) {
    std::vector<PlanarPath::Arc> parts;
    for (const auto& a : j.at("arcs"))
      parts.push_back({complex_from_json(a.at("center")), a.at("radius").get<double>(),
                       a.at("from").get<double>(), a.at("to").get<double>()});
    return PlanarPath::arcs(parts, j.value("samples_per_length", 1000.0));
  }
  std::vector<std::complex<double>> v;
  for (const auto& w : j.at("vertices")) v.push_back(complex_from_json(w));
  return PlanarPath(std::move(v));
}

}  // namespace

nlohmann::json to_json(const DomainSpec& d) {
  nlohmann::json prims = nlohmann::json::array();
  for (const auto& p : d.primitives) {
    if (const auto* b = std::get_if<BallRegion>(&p)) {
      prims.push_back({{"type", "ball"}, {"center", to_json(b->center)}, {"radius", b->radius}});
    } else {
      const auto& t = std::get<TubeRegion>(p);
      prims.push_back({{"type", t.conjugate ? "conj_tube" : "tube"},
                       {"unit", t.unit.value()},
                       {"radius", t.radius},
                       {"path", path_to_json(t.path)}});
    }
  }
  return {{"primitives", prims}};
}

DomainSpec domain_from_json(const nlohmann::json& j) {
  DomainSpec d;
  for (const auto& p : j.at("primitives")) {
    const auto type = p.at("type").get<std::string>();
    if (type == "ball") {
      d.primitives.emplace_back(BallRegion{slice_point_from_json(p.at("center")), p.at("radius").get<double>()});
    } else if (type == "tube" || type == "conj_tube") {
      d.primitives.emplace_back(TubeRegion{ImaginaryUnit(p.at("unit").get<Octonion>()),
                                           path_from_json(p.at("path")), p.at("radius").get<double>(),
                                           type == "conj_tube"});
    } else {
      throw std::invalid_argument("unknown domain primitive type: " + type);
    }
  }
  return d;
}

}  // namespace octslice
