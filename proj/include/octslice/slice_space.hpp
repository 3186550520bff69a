#pragma once

#include <complex>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "octslice/octonion.hpp"

namespace octslice {

using RealVector = std::vector<double>;
using ComplexVector = std::vector<std::complex<double>>;

enum class Sign { negative, zero, positive };

/// Lexicographic positivity of y: the first nonzero entry decides.
Sign is_positive(std::span<const double> y);

/// Unit attached to points with y = 0.
ImaginaryUnit default_unit();

/// Point x + yI of the quadratic cone, stored canonically: y is positive or
/// zero, and real points carry default_unit().
class SlicePoint {
 public:
  SlicePoint(RealVector x, RealVector y, const ImaginaryUnit& unit);

  /// Real point x.
  static SlicePoint real(RealVector x);
  /// Point on C_I with slice coordinates z (z_l = x_l + i y_l maps to x_l + y_l I).
  static SlicePoint on_slice(const ComplexVector& z, const ImaginaryUnit& unit);

  std::size_t dim() const { return x_.size(); }
  const RealVector& x() const { return x_; }
  const RealVector& y() const { return y_; }
  const ImaginaryUnit& unit() const { return unit_; }
  bool is_real() const;

  /// The coordinates (x_l + y_l I)_l.
  std::vector<Octonion> to_octonions() const;
  /// Slice coordinates x + iy relative to `unit`, which must be +-unit() (or
  /// anything when the point is real). Throws DomainError otherwise.
  ComplexVector slice_coords(const ImaginaryUnit& unit, double tol = 1e-12) const;
  /// True when the point lies in C_unit^n.
  bool on_slice_of(const ImaginaryUnit& unit, double tol = 1e-12) const;

  friend bool operator==(const SlicePoint&, const SlicePoint&) = default;

 private:
  RealVector x_, y_;
  ImaginaryUnit unit_;
};

/// Returns the equal point with positive (or zero) y.
SlicePoint canonicalize(RealVector x, RealVector y, const ImaginaryUnit& unit);

/// Euclidean distance in O^n.
double distance(const SlicePoint& a, const SlicePoint& b);

/// x + y J_k for m units: the point itself first, then units from the
/// deterministic sweep (skipping +-unit()).
std::vector<SlicePoint> axial_orbit(const SlicePoint& q, std::size_t m);

/// Axially symmetric set whose slice sections x +- yI are closed planar
/// polydiscs around center (taken in the center's slice).
struct SlicePolydisc {
  SlicePoint center;
  RealVector radius;

  SlicePolydisc(SlicePoint c, RealVector r);
};

bool polydisc_contains(const SlicePolydisc& p, const SlicePoint& q);

/// Polyline in the first complex coordinate. Arcs remember their analytic
/// description so they can be resampled.
class PlanarPath {
 public:
  struct Arc {
    std::complex<double> center;
    double radius;
    double from;  // angle, radians
    double to;
  };

  explicit PlanarPath(std::vector<std::complex<double>> vertices);
  /// Unit-speed arc sampled at `samples_per_length` vertices per unit arc length.
  static PlanarPath arc(const Arc& a, double samples_per_length = 1000.0);
  /// Arcs joined end to end (each arc sampled separately).
  static PlanarPath arcs(const std::vector<Arc>& parts, double samples_per_length = 1000.0);

  const std::vector<std::complex<double>>& vertices() const { return vertices_; }
  const std::vector<Arc>& arc_parts() const { return arcs_; }
  double samples_per_length() const { return density_; }

  /// Complex conjugate path.
  PlanarPath conjugated() const;
  /// Same path with `factor` times as many samples (arcs only; raw polylines
  /// are returned unchanged since they are exact).
  PlanarPath refined(double factor) const;
  /// Upper bound on the distance between the polyline and the analytic arcs.
  double chord_error() const;

  /// Distance from point w to the polyline.
  double distance(std::complex<double> w) const;
  /// Index of the vertex nearest to w.
  std::size_t nearest_vertex(std::complex<double> w) const;

 private:
  std::vector<std::complex<double>> vertices_;
  std::vector<Arc> arcs_;
  double density_ = 0.0;
};

/// Ball {q : |q - center| < radius} in O_s^n (Euclidean in O^n).
struct BallRegion {
  SlicePoint center;
  double radius;
};

/// P_U({z in C^n : dist(z, path) < radius}), the path living in the first
/// coordinate with the others zero. With `conjugate`, the planar set is the
/// mirror image {x + yi : x - yi in tube}.
struct TubeRegion {
  ImaginaryUnit unit;
  PlanarPath path;
  double radius;
  bool conjugate = false;
};

using DomainPrimitive = std::variant<BallRegion, TubeRegion>;

bool region_contains(const BallRegion& b, const SlicePoint& q);
bool region_contains(const TubeRegion& t, const SlicePoint& q);

/// Euclidean distance in C^n from z to the tube's planar path (conjugated
/// for mirror tubes). Resamples arcs until the strict comparison against the
/// radius is stable.
double tube_distance(const TubeRegion& t, const ComplexVector& z);

/// Union of primitive regions.
struct DomainSpec {
  std::vector<DomainPrimitive> primitives;
};

bool domain_contains(const DomainSpec& omega, const SlicePoint& q);

/// The slice-domain of the square-root example, built for units I, J with
/// J != +-I in dimension n:
///   B(th1, 1/2) u B(-th1, 1/2) u P_J(U' u V' u V) u P_I(U),
/// where U, V are the 1/2-tubes around alpha(t) = e^{i pi t/2} and
/// beta(t) = e^{i pi (t+1)/2}. Balls are open.
DomainSpec sqrt_example_domain(std::size_t n, const ImaginaryUnit& I, const ImaginaryUnit& J);

void to_json(nlohmann::json& j, const Octonion& q);
void from_json(const nlohmann::json& j, Octonion& q);
nlohmann::json to_json(const SlicePoint& p);
SlicePoint slice_point_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DomainSpec& d);
DomainSpec domain_from_json(const nlohmann::json& j);

}  // namespace octslice
