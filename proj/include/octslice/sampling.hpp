#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "octslice/octonion.hpp"

namespace octslice {

/// Seeded sampler built on mt19937_64, whose output sequence is fixed by the
/// standard. Uniform and normal variates are derived by hand so results are
/// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal();

  Octonion octonion(double scale = 1.0);
  ImaginaryUnit unit();
  std::vector<double> vector(std::size_t n, double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

/// Deterministic sequence of m imaginary units used wherever a "sweep over S"
/// is needed: the seven basis units first, then pseudo-random units from a
/// fixed seed.
std::vector<ImaginaryUnit> unit_sweep(std::size_t m);

}  // namespace octslice
