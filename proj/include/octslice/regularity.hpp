#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "octslice/operators.hpp"
#include "octslice/slice_functions.hpp"

namespace octslice {

/// Finite-difference Cauchy-Riemann residuals at one point.
struct CRReport {
  std::vector<double> residual;  // one entry per variable
  double h = 0.0;
  /// max residual at h divided by max residual at h/2; present only when
  /// both step sizes were probed.
  std::optional<double> ratio;

  double max_residual() const;
};

/// |1/2 (d/dx_m + I d/dy_m) f| per variable m, by central differences on C_I
/// with step h. z must lie on C_I. With `with_ratio`, also probes h/2.
/// Throws DomainError when a stencil point leaves f's domain or h <= 0.
CRReport cr_residual_slice(const SliceFunction& f, const ImaginaryUnit& I, const SlicePoint& z, double h,
                           bool with_ratio = true);

/// Residual of 1/2 (d/dx_m + sigma d/dy_m) F, sigma = [[0, -1], [1, 0]]:
/// per variable, the norm of (1/2(dF1/dx - dF2/dy), 1/2(dF2/dx + dF1/dy)).
CRReport stem_cr_residual(const StemFunction& F, std::span<const double> x, std::span<const double> y,
                          double h, bool with_ratio = true);

/// f_I = F1 + F2 J + F3 K + F4 (JK) with F_i valued in C_I, for the s-basis
/// (I, J, K).
struct SplitComponents {
  SBasis basis;
  std::array<std::function<Octonion(const SlicePoint&)>, 4> F;

  /// F1 + F2 J + F3 K + F4 (JK) at z.
  Octonion recompose(const SlicePoint& z) const;
};

/// Coefficients (a_k + b_k I), k = 1..4, of v in C_I + C_I J + C_I K + C_I (JK).
std::array<std::complex<double>, 4> split_value(const Octonion& v, const SBasis& basis);
/// Inverse of split_value.
Octonion recompose_value(const std::array<std::complex<double>, 4>& parts, const SBasis& basis);

SplitComponents split_components(SliceFunction f, const SBasis& basis);

/// I,l-derivative 1/2 (d/dx_l - I d/dy_l) f_I at z in C_I (central differences).
Octonion slice_derivative_Il(const SliceFunction& f, const ImaginaryUnit& I, std::size_t l,
                             const SlicePoint& z, double h);

/// Derivative of f along the real coordinate x_l at q (central differences).
Octonion slice_derivative_l(const SliceFunction& f, std::size_t l, const SlicePoint& q, double h);

/// One sampled Cauchy-Riemann measurement.
struct RegularityRecord {
  SlicePoint point;
  ImaginaryUnit unit;
  std::size_t variable;
  double h;
  double residual;
  std::optional<double> ratio;
};

nlohmann::json to_json(const RegularityRecord& r);
nlohmann::json to_json(const CRReport& r);

struct RegularityReport {
  std::vector<RegularityRecord> records;
  double max_residual = 0.0;
};

nlohmann::json to_json(const RegularityReport& r);

/// Sampling region for regularity reports: a membership predicate plus the
/// box [-box, box]^{2n} probes are drawn from.
struct SampleRegion {
  std::size_t dim;
  std::function<bool(const SlicePoint&)> contains;
  double box = 1.0;
};

SampleRegion region_of(const DomainSpec& omega, std::size_t dim, double box);
SampleRegion region_of(const SlicePolydisc& p, double box);

/// Max Cauchy-Riemann residual over `units` sweep units and `probes` interior
/// points per unit. Only points whose whole stencil (at h and h/2) stays in
/// the region are used; boundary points are skipped, not decided.
RegularityReport weak_regularity_report(const SliceFunction& f, const SampleRegion& region, std::size_t units,
                                        std::size_t probes, double h = 1e-4, std::uint64_t seed = 1);

}  // namespace octslice
