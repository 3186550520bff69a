#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's multiplication or geometry code.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

/// Sign of the permutation taking (a, b, c) to (x, y, z) when the sets agree, 0 otherwise.
inline int permutation_sign(std::array<int, 3> from, std::array<int, 3> to) {
  int sign = 1;
  for (int i = 0; i < 3; ++i) {
    const auto it = std::find(from.begin() + i, from.end(), to[static_cast<std::size_t>(i)]);
    if (it == from.end()) return 0;
    const auto j = static_cast<std::size_t>(it - from.begin());
    if (j != static_cast<std::size_t>(i)) {
      std::swap(from[static_cast<std::size_t>(i)], from[j]);
      sign = -sign;
    }
  }
  return sign;
}

/// e_i e_j as (sign, index) from the structure constants epsilon_ijk, found by
/// searching all seven lines of the plane for the one containing i and j.
inline std::pair<int, int> basis_product(int i, int j) {
  static constexpr int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {5, 3, 6}, {6, 1, 7}, {7, 2, 5}};
  if (i == 0) return {1, j};
  if (j == 0) return {1, i};
  if (i == j) return {-1, 0};
  for (const auto& t : triples)
    for (int k = 1; k < 8; ++k) {
      const int s = permutation_sign({t[0], t[1], t[2]}, {i, j, k});
      if (s != 0) return {s, k};
    }
  return {0, -1};
}

/// Octonion product as dense coefficient arrays, from basis_product.
inline std::array<double, 8> multiply(const std::array<double, 8>& a, const std::array<double, 8>& b) {
  std::array<double, 8> c{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const auto [s, k] = basis_product(i, j);
      c[static_cast<std::size_t>(k)] += s * a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  return c;
}

/// Distance from w to the unit-circle arc {e^{it} : t between a and b}, a < b.
inline double arc_distance(std::complex<double> w, double a, double b) {
  const double r = std::abs(w);
  if (r > 0.0) {
    double t = std::arg(w);
    const double two_pi = 2.0 * std::numbers::pi;
    while (t < a) t += two_pi;
    while (t > b + 1e-15 && t - two_pi >= a) t -= two_pi;
    if (t >= a && t <= b) return std::abs(r - 1.0);
  }
  return std::min(std::abs(w - std::polar(1.0, a)), std::abs(w - std::polar(1.0, b)));
}

/// Finite-difference weights from the Vandermonde system sum_j w_j (j h)^p / p! = delta_{pk}.
inline std::vector<double> stencil_weights(int k, int m, double h) {
  const int n = 2 * m + 1;
  Eigen::MatrixXd V(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  for (int p = 0; p < n; ++p) {
    for (int j = 0; j < n; ++j) V(p, j) = std::pow((j - m) * h, p) / std::tgamma(p + 1.0);
  }
  rhs(k) = 1.0;
  const Eigen::VectorXd w = V.fullPivLu().solve(rhs);
  return {w.data(), w.data() + n};
}

}  // namespace oracle
