#pragma once

#include <compare>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "octslice/operators.hpp"
#include "octslice/slice_functions.hpp"

namespace octslice {

/// Multi-index alpha in N^n.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> a);
  static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<int>(n, 0)); }
  /// theta_l: 1 in slot l, 0 elsewhere.
  static MultiIndex unit(std::size_t n, std::size_t l);

  std::size_t dim() const { return a_.size(); }
  int operator[](std::size_t i) const { return a_[i]; }
  const std::vector<int>& values() const { return a_; }
  int order() const;

  /// Componentwise alpha <= beta.
  bool le(const MultiIndex& b) const;
  /// alpha! = prod alpha_i!
  double factorial() const;

  MultiIndex operator-(const MultiIndex& b) const;
  MultiIndex operator+(const MultiIndex& b) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> a_;
};

/// prod_i binom(alpha_i, beta_i).
double binomial(const MultiIndex& alpha, const MultiIndex& beta);

/// All beta with 0 <= beta <= alpha (componentwise).
std::vector<MultiIndex> sub_indices(const MultiIndex& alpha);

/// All alpha in N^n with |alpha| <= degree, graded order.
std::vector<MultiIndex> indices_up_to(std::size_t n, int degree);

/// L_q^beta = (L_{q_1})^{beta_1} ... (L_{q_n})^{beta_n} as a matrix product,
/// the l = 1 factor outermost.
Mat8 operator_power(const std::vector<Octonion>& q, const MultiIndex& beta);

/// The operator (q - p)^{*alpha} = sum_{0<=beta<=alpha} binom(alpha, beta)
/// (-1)^{|alpha-beta|} L_q^beta L_p^{alpha-beta}.
Mat8 star_power_matrix(const SlicePoint& q, const SlicePoint& p, const MultiIndex& alpha);

/// (q - p)^{*alpha} a.
Octonion star_power_apply(const SlicePoint& q, const SlicePoint& p, const MultiIndex& alpha, const Octonion& a);

enum class FactorialConvention {
  divide,  // coefficient a_alpha is f^(alpha)(p), weighted by 1/alpha!
  none,    // coefficient used as is
};

/// Truncated series sum_alpha c(alpha) (q - p)^{*alpha} a_alpha.
struct StarSeries {
  SlicePoint center;
  std::map<MultiIndex, Octonion> coeffs;
  int max_degree = 0;
  FactorialConvention convention = FactorialConvention::divide;
};

Octonion series_eval(const StarSeries& s, const SlicePoint& q);

/// Weights w_j, j = -m..m, such that sum_j w_j g(j h) approximates g^(k)(0);
/// exact for polynomials of degree <= 2m.
std::vector<double> central_stencil_weights(int k, int m, double h);

/// f^(alpha)(p) for every |alpha| <= max_degree from one tensor-product
/// stencil of 2m+1 real-direction nodes per variable, m = max(1,
/// ceil(max_degree / 2)). Exact (to rounding) for polynomials of degree
/// <= 2m. The series carries FactorialConvention::divide.
StarSeries taylor_coeffs(const SliceFunction& f, const SlicePoint& p, int max_degree, double h);

nlohmann::json to_json(const StarSeries& s);
StarSeries star_series_from_json(const nlohmann::json& j);

/// Moduli of r + Ks for K = +-I and K = J.
struct MkBound {
  bool holds;
  double lower;
  double value;
  double upper;
  double t_J;           // Re((Js) r^{-1}); 0 when r = 0
  double rjs_residual;  // ||r+Js| - |1+(Js)r^{-1}||r||; 0 when r = 0
};

/// min_{K=+-I} |r+Ks| <= |r+Js| <= max_{K=+-I} |r+Ks|. Requires r conj(s) in
/// C_I (to 1e-10 relative), else DomainError("r s̄ not on slice C_I").
MkBound bound_check_mk(const Octonion& r, const Octonion& s, const ImaginaryUnit& I, const ImaginaryUnit& J);

struct MlqBound {
  bool holds;
  double lower;
  double value;
  double upper;
};

/// Compares |(q-p)^{*alpha} a| with its values at the companions x +- yI,
/// I the unit of p.
MlqBound bound_check_mlq(const SlicePoint& p, const SlicePoint& q, const MultiIndex& alpha, const Octonion& a);

}  // namespace octslice
