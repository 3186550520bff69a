#include "octslice/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace octslice {

namespace {

constexpr double pi = std::numbers::pi;

double segment_distance_to_origin(std::complex<double> a, std::complex<double> b) {
  const std::complex<double> d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(a);
  const double t = std::clamp(-(a.real() * d.real() + a.imag() * d.imag()) / len2, 0.0, 1.0);
  return std::abs(a + t * d);
}

}  // namespace

std::vector<double> branch_arguments(const PlanarPath& path, double theta_start) {
  const auto& v = path.vertices();
  if (v.empty()) throw std::invalid_argument("empty path");
  if (std::abs(v.front()) == 0.0) throw DomainError("branch point on path");
  const double offset = theta_start - std::arg(v.front());
  if (std::abs(offset - 2.0 * pi * std::round(offset / (2.0 * pi))) > 1e-9)
    throw DomainError("start angle is not an argument of the first vertex");

  std::vector<double> theta(v.size());
  theta[0] = theta_start;
  for (std::size_t k = 1; k < v.size(); ++k) {
    const double scale = std::max(std::abs(v[k - 1]), std::abs(v[k]));
    if (segment_distance_to_origin(v[k - 1], v[k]) <= 1e-12 * scale) throw DomainError("branch point on path");
    theta[k] = theta[k - 1] + std::arg(v[k] / v[k - 1]);
  }
  return theta;
}

BranchState continue_sqrt(const PlanarPath& path, double theta_start) {
  return {path.vertices().back(), branch_arguments(path, theta_start).back()};
}

Octonion sqrt_on_slice(double modulus, double theta, const ImaginaryUnit& U) {
  const double r = std::sqrt(modulus);
  return Octonion(r * std::cos(theta / 2.0)) + (r * std::sin(theta / 2.0)) * U.value();
}

Octonion sqrt_on_slice(const BranchState& b, const ImaginaryUnit& U) {
  return sqrt_on_slice(std::abs(b.anchor), b.theta, U);
}

Octonion principal_sqrt(double x, double y, const ImaginaryUnit& U) {
  const std::complex<double> w = std::sqrt(std::complex<double>(x, y));
  return Octonion(w.real()) + w.imag() * U.value();
}

WeakSqrtExtension::WeakSqrtExtension(std::size_t n, const ImaginaryUnit& I, const ImaginaryUnit& J,
                                     double samples_per_length)
    : n_(n),
      I_(I),
      J_(J),
      omega_(sqrt_example_domain(n, I, J)),
      path_I_(PlanarPath::arc({0.0, 1.0, 0.0, pi / 2}, samples_per_length)),
      path_J_(PlanarPath::arc({0.0, 1.0, 0.0, -3.0 * pi / 2}, samples_per_length)),
      theta_I_(branch_arguments(path_I_, 0.0)),
      theta_J_(branch_arguments(path_J_, 0.0)) {}

Octonion WeakSqrtExtension::on_path(const PlanarPath& path, const std::vector<double>& theta,
                                    std::complex<double> z1, const ImaginaryUnit& U) const {
  const std::size_t k = path.nearest_vertex(z1);
  const double t = theta[k] + std::arg(z1 / path.vertices()[k]);
  return sqrt_on_slice(std::abs(z1), t, U);
}

Octonion WeakSqrtExtension::operator()(const SlicePoint& q) const {
  if (q.dim() != n_) throw std::invalid_argument("dimension mismatch");
  const auto& p = omega_.primitives;
  const ImaginaryUnit& U = q.unit();
  if (region_contains(std::get<BallRegion>(p[0]), q)) return principal_sqrt(q.x()[0], q.y()[0], U);
  if (region_contains(std::get<BallRegion>(p[1]), q))
    return principal_sqrt(-q.x()[0], -q.y()[0], U) * (-J_).value();
  if (region_contains(std::get<TubeRegion>(p[2]), q) || region_contains(std::get<TubeRegion>(p[3]), q) ||
      region_contains(std::get<TubeRegion>(p[4]), q))
    return on_path(path_J_, theta_J_, q.slice_coords(J_).front(), J_);
  if (region_contains(std::get<TubeRegion>(p[5]), q))
    return on_path(path_I_, theta_I_, q.slice_coords(I_).front(), I_);
  throw DomainError("point outside the square-root domain");
}

SliceFunction WeakSqrtExtension::as_function() const {
  auto self = std::make_shared<const WeakSqrtExtension>(*this);
  SliceFunction f;
  f.eval = [self](const SlicePoint& q) { return (*self)(q); };
  f.domain = [self](const SlicePoint& q) { return q.dim() == self->dim() && domain_contains(self->domain(), q); };
  return f;
}

Octonion eval_weak_sqrt(const SlicePoint& q, const DomainSpec& omega, const ImaginaryUnit& I,
                        const ImaginaryUnit& J) {
  if (!domain_contains(omega, q)) throw DomainError("point outside domain");
  return WeakSqrtExtension(q.dim(), I, J)(q);
}

NotSliceReport not_slice_test(const SliceFunction& f, std::size_t n, const ImaginaryUnit& I,
                              const ImaginaryUnit& J) {
  const RealVector x(n, 0.0);
  RealVector y(n, 0.0);
  y[0] = 1.0;
  RealVector ny = y;
  ny[0] = -1.0;
  NotSliceReport r{};
  r.f_I = f(SlicePoint(x, y, I));
  r.f_J = f(SlicePoint(x, y, J));
  r.f_minus_J = f(SlicePoint(x, ny, J));
  r.lhs = r.f_I;
  r.rhs = repr_two_point(f, I, J, x, y);
  r.residual = (r.lhs - r.rhs).norm();
  return r;
}

NotSliceReport verify_not_slice(const ImaginaryUnit& I, const ImaginaryUnit& J, std::size_t n) {
  return not_slice_test(WeakSqrtExtension(n, I, J).as_function(), n, I, J);
}

nlohmann::json to_json(const NotSliceReport& r) {
  return {{"f_theta1_I", r.f_I}, {"f_theta1_J", r.f_J}, {"f_minus_theta1_J", r.f_minus_J},
          {"lhs", r.lhs},        {"rhs", r.rhs},        {"residual", r.residual}};
}

}  // namespace octslice
