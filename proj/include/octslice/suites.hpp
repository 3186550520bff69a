#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "octslice/slice_functions.hpp"

namespace octslice {

/// One verification suite: the largest residual seen over `cases` checks and
/// the tolerance it was judged against.
struct SuiteResult {
  std::string suite;
  std::size_t cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();
};

nlohmann::json to_json(const SuiteResult& r);

struct SuiteConfig {
  std::uint64_t seed = 1;
  /// Probe count for every randomized suite; 0 keeps each suite's default.
  std::size_t probes = 0;
  /// Overrides every suite's tolerance.
  std::optional<double> tol;
  /// verify-slice: add a function that is not slice to the sliceness suite.
  bool inject_nonslice = false;
};

/// Multiplication table, alternativity, norm multiplicativity, the scalar
/// product adjoint rule, the (L_J - L_K)^{-1} identity and the block inverse.
std::vector<SuiteResult> run_verify_algebra(const SuiteConfig& cfg);
/// Representation forms, stem round trips, splitting and regularity checks.
std::vector<SuiteResult> run_verify_slice(const SuiteConfig& cfg);
/// Taylor reconstruction, the star exponential and the modulus bounds.
std::vector<SuiteResult> run_taylor_demo(const SuiteConfig& cfg);
/// Values and non-sliceness of the weak square root.
std::vector<SuiteResult> run_sqrt_example(const SuiteConfig& cfg);

bool all_pass(const std::vector<SuiteResult>& results);

/// f(x + yI) = Re P(z) a + Im P(z) (I a) with z = x + iy. Slice whenever P has
/// real Taylor coefficients (P(conj z) = conj P(z)).
SliceFunction complex_polynomial(std::function<std::complex<double>(const ComplexVector&)> P, const Octonion& a);

/// q -> (q - p)^{*alpha} a.
SliceFunction star_monomial(const SlicePoint& p, const std::vector<int>& alpha, const Octonion& a);

struct NamedFunction {
  std::string name;
  std::size_t dim;
  SliceFunction f;
};

/// Ten slice functions in one and two variables used by the sliceness suites.
std::vector<NamedFunction> slice_test_functions();

/// f(q) = e2 q_1: not a slice function.
SliceFunction nonslice_test_function();

}  // namespace octslice
