#include "octslice/sampling.hpp"

#include <cmath>
#include <numbers>

namespace octslice {

double Rng::normal() {
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Octonion Rng::octonion(double scale) {
  Octonion q;
  for (std::size_t i = 0; i < 8; ++i) q[i] = scale * normal();
  return q;
}

ImaginaryUnit Rng::unit() {
  for (;;) {
    Octonion v;
    for (std::size_t i = 1; i < 8; ++i) v[i] = normal();
    if (v.norm() > 1e-6) return ImaginaryUnit::normalized(v);
  }
}

std::vector<double> Rng::vector(std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform(lo, hi);
  return v;
}

std::vector<ImaginaryUnit> unit_sweep(std::size_t m) {
  std::vector<ImaginaryUnit> out;
  out.reserve(m);
  for (int i = 1; i <= 7 && out.size() < m; ++i) out.push_back(ImaginaryUnit::basis(i));
  Rng rng(0x0c7a5eedULL);
  while (out.size() < m) out.push_back(rng.unit());
  return out;
}

}  // namespace octslice
