#pragma once

#include <complex>
#include <vector>

#include <nlohmann/json.hpp>

#include "octslice/slice_functions.hpp"
#include "octslice/slice_space.hpp"

namespace octslice {

/// Endpoint of a continued argument: |anchor| e^{i theta} = anchor.
struct BranchState {
  std::complex<double> anchor;
  double theta;
};

/// Continuous argument at every vertex of the path, starting from theta_start.
/// Per-segment increments lie in (-pi, pi). Throws DomainError("branch point
/// on path") when a segment meets the origin, and DomainError when theta_start
/// is not an argument of the first vertex.
std::vector<double> branch_arguments(const PlanarPath& path, double theta_start);

/// Argument continued to the last vertex.
BranchState continue_sqrt(const PlanarPath& path, double theta_start);

/// |z|^{1/2} (cos(theta/2) + U sin(theta/2)).
Octonion sqrt_on_slice(double modulus, double theta, const ImaginaryUnit& U);
Octonion sqrt_on_slice(const BranchState& b, const ImaginaryUnit& U);

/// Principal square root of the octonion x + yU (x, y real), cut along the
/// negative reals.
Octonion principal_sqrt(double x, double y, const ImaginaryUnit& U);

/// The weak slice regular square root of the first coordinate on the domain
/// B(th1, 1/2) u B(-th1, 1/2) u P_J(U' u V' u V) u P_I(U).
///
/// Branches: principal on B(th1, 1/2); continued along 1 -> i on the C_I tube;
/// continued along 1 -> -i -> -1 -> i (theta from 0 to -3 pi/2) on the C_J
/// tubes; sqrt(-q_1) (-J) on B(-th1, 1/2), which matches the C_J branch there.
class WeakSqrtExtension {
 public:
  WeakSqrtExtension(std::size_t n, const ImaginaryUnit& I, const ImaginaryUnit& J,
                    double samples_per_length = 1000.0);

  std::size_t dim() const { return n_; }
  const ImaginaryUnit& I() const { return I_; }
  const ImaginaryUnit& J() const { return J_; }
  const DomainSpec& domain() const { return omega_; }

  /// Throws DomainError outside the domain.
  Octonion operator()(const SlicePoint& q) const;
  SliceFunction as_function() const;

 private:
  Octonion on_path(const PlanarPath& path, const std::vector<double>& theta, std::complex<double> z1,
                   const ImaginaryUnit& U) const;

  std::size_t n_;
  ImaginaryUnit I_, J_;
  DomainSpec omega_;
  PlanarPath path_I_, path_J_;
  std::vector<double> theta_I_, theta_J_;
};

/// f~(q) for q in omega, which must contain q; omega is normally
/// sqrt_example_domain(n, I, J). Throws DomainError for points outside omega or
/// outside every branch region.
Octonion eval_weak_sqrt(const SlicePoint& q, const DomainSpec& omega, const ImaginaryUnit& I,
                        const ImaginaryUnit& J);

/// Two-point representation test at x = 0, y = th1: lhs = f(th1 I),
/// rhs = 1/2[f(th1 J) + f(-th1 J)] - (I/2){J[f(th1 J) - f(-th1 J)]}.
struct NotSliceReport {
  Octonion f_I;        // f(th1 I)
  Octonion f_J;        // f(th1 J)
  Octonion f_minus_J;  // f(-th1 J)
  Octonion lhs;
  Octonion rhs;
  double residual;
};

NotSliceReport not_slice_test(const SliceFunction& f, std::size_t n, const ImaginaryUnit& I,
                              const ImaginaryUnit& J);

/// not_slice_test on the weak square root built for (I, J); n = 1 unless given.
/// A strictly positive residual certifies that f~ is not a slice function.
NotSliceReport verify_not_slice(const ImaginaryUnit& I, const ImaginaryUnit& J, std::size_t n = 1);

nlohmann::json to_json(const NotSliceReport& r);

}  // namespace octslice
