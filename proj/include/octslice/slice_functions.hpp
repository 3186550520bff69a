#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "octslice/operators.hpp"
#include "octslice/slice_space.hpp"

namespace octslice {

/// Column (F1, F2)^T in O^{2x1}.
struct StemValue {
  Octonion f1;
  Octonion f2;
};

/// (x, y) -> (F1, F2). The evaluator must be pure.
struct StemFunction {
  std::function<StemValue(std::span<const double> x, std::span<const double> y)> eval;
  /// Empty means "everywhere".
  std::function<bool(std::span<const double> x, std::span<const double> y)> domain;

  StemValue operator()(std::span<const double> x, std::span<const double> y) const;
};

/// Octonion-valued function on (a subset of) the quadratic cone, given by a
/// pure evaluator and an optional membership predicate.
struct SliceFunction {
  std::function<Octonion(const SlicePoint&)> eval;
  std::function<bool(const SlicePoint&)> domain;

  bool contains(const SlicePoint& q) const { return !domain || domain(q); }
  /// Evaluates, throwing DomainError outside the domain.
  Octonion operator()(const SlicePoint& q) const;
};

/// Restricts f to the DomainSpec.
SliceFunction with_domain(SliceFunction f, DomainSpec omega);

/// f(x + yI) = F1(x, y) + I F2(x, y) on the canonical (x, y, I) of q.
Octonion eval_from_stem(const StemFunction& F, const SlicePoint& q);

/// Slice function induced by F.
SliceFunction induced_function(StemFunction F);

/// F(x, y) = [[1, L_J], [1, L_K]]^{-1} (f(x+yJ), f(x+yK))^T.
StemFunction stem_from_two_slices(SliceFunction f, const ImaginaryUnit& J, const ImaginaryUnit& K);

/// Matrix form: (1, L_I) [[1, L_J], [1, L_K]]^{-1} (f(x+yJ), f(x+yK))^T.
Octonion repr_matrix(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                     const ImaginaryUnit& K, std::span<const double> x, std::span<const double> y);

/// Linear form in I:
///   (J-K)^{-1}[J f(x+yJ) - K f(x+yK)] + I{(J-K)^{-1}[f(x+yJ) - f(x+yK)]}.
Octonion repr_linear_I(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                       const ImaginaryUnit& K, std::span<const double> x, std::span<const double> y);

/// Linear form in f:
///   (I-K)[(J-K)^{-1} f(x+yJ)] + (I-J)[(K-J)^{-1} f(x+yK)].
Octonion repr_linear_f(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                       const ImaginaryUnit& K, std::span<const double> x, std::span<const double> y);

/// Two-point form (K = -J):
///   1/2 [f(x+yJ) + f(x-yJ)] - (I/2){J[f(x+yJ) - f(x-yJ)]}.
Octonion repr_two_point(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                        std::span<const double> x, std::span<const double> y);

/// (x, y, I, J, K) with J != K.
struct Probe {
  RealVector x, y;
  ImaginaryUnit I, J, K;
};

/// Probes with (x, y) uniform in [-box, box]^{2n} and uniform random units,
/// all from one seeded generator. Points are not filtered against any
/// domain; see make_probes_in for that.
std::vector<Probe> make_probes(std::size_t n, std::size_t count, std::uint64_t seed, double box = 1.0);

/// As make_probes, keeping only probes whose three points lie in f's domain.
std::vector<Probe> make_probes_in(const SliceFunction& f, std::size_t n, std::size_t count,
                                  std::uint64_t seed, double box = 1.0);

/// One comparison f(x + yI) vs. a representation formula.
struct ProbeRecord {
  Probe probe;
  Octonion lhs;
  Octonion rhs;
  double residual;
};

nlohmann::json to_json(const Probe& p);
nlohmann::json to_json(const ProbeRecord& r);

/// Per-probe comparison of f(x+yI) against repr_matrix.
std::vector<ProbeRecord> sliceness_records(const SliceFunction& f, std::span<const Probe> probes);
/// max |f(x+yI) - repr_matrix(f, I, J, K, x, y)| over the probes.
double sliceness_residual(const SliceFunction& f, std::span<const Probe> probes);

/// F(u, v) = (1/2[f(u+vI) + f(u-vI)], -1/2 I[f(u+vI) - f(u-vI)])^T.
StemFunction stem_from_function(SliceFunction f, const ImaginaryUnit& I);

/// Pair (F1, F2) of the intrinsic extension to signed (x, y): equal to F on
/// the upper half-plane and (F1(x,-y), -F2(x,-y)) elsewhere.
using IntrinsicStem = std::function<StemValue(std::span<const double>, std::span<const double>)>;
IntrinsicStem stem_to_intrinsic(StemFunction F);

}  // namespace octslice
