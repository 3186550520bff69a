#pragma once

#include <array>

#include <Eigen/Dense>

#include "octslice/octonion.hpp"

namespace octslice {

using Mat8 = Eigen::Matrix<double, 8, 8>;
using Mat16 = Eigen::Matrix<double, 16, 16>;
using Vec8 = Eigen::Matrix<double, 8, 1>;

Vec8 to_vec(const Octonion& q);
Octonion from_vec(const Vec8& v);

/// Real-linear operator on O given by its 8x8 matrix. Composing operators is
/// a matrix product, so products like L_J L_K are unambiguous even though
/// octonion multiplication does not associate.
class LeftMultOperator {
 public:
  LeftMultOperator() : m_(Mat8::Identity()) {}
  explicit LeftMultOperator(const Mat8& m) : m_(m) {}

  static LeftMultOperator identity() { return LeftMultOperator(); }

  const Mat8& matrix() const { return m_; }
  Octonion apply(const Octonion& r) const { return from_vec(m_ * to_vec(r)); }
  Octonion operator()(const Octonion& r) const { return apply(r); }

  friend LeftMultOperator operator*(const LeftMultOperator& a, const LeftMultOperator& b) {
    return LeftMultOperator(a.m_ * b.m_);
  }
  friend LeftMultOperator operator+(const LeftMultOperator& a, const LeftMultOperator& b) {
    return LeftMultOperator(a.m_ + b.m_);
  }
  friend LeftMultOperator operator-(const LeftMultOperator& a, const LeftMultOperator& b) {
    return LeftMultOperator(a.m_ - b.m_);
  }
  friend LeftMultOperator operator*(double s, const LeftMultOperator& a) {
    return LeftMultOperator(s * a.m_);
  }

 private:
  Mat8 m_;
};

/// L_q: column j is the coefficient vector of q * e_j.
LeftMultOperator left_mult_matrix(const Octonion& q);

/// (L_J - L_K)^{-1}. Uses the closed form -(L_J - L_K) / |J - K|^2, which holds
/// because J - K is purely imaginary. Throws DomainError("units must differ")
/// when J = K.
LeftMultOperator difference_inverse(const ImaginaryUnit& J, const ImaginaryUnit& K);

/// Frobenius residual of (L_J - L_K)^{-1} L_J = -L_K (L_J - L_K)^{-1}.
double verify_cjk(const ImaginaryUnit& J, const ImaginaryUnit& K);

/// 2x2 grid of operators acting on columns (a, b) in O^{2x1}.
struct BlockOperator2 {
  LeftMultOperator a11, a12, a21, a22;

  Mat16 matrix() const;
  std::array<Octonion, 2> apply(const Octonion& top, const Octonion& bottom) const;
};

/// The block matrix [[1, L_J], [1, L_K]].
BlockOperator2 slice_pair_matrix(const ImaginaryUnit& J, const ImaginaryUnit& K);

/// Closed-form inverse of [[1, L_J], [1, L_K]]:
///   [[(L_J-L_K)^{-1} L_J, (L_K-L_J)^{-1} L_K], [(L_J-L_K)^{-1}, (L_K-L_J)^{-1}]].
BlockOperator2 block_inverse(const ImaginaryUnit& J, const ImaginaryUnit& K);

/// Max-abs residual of block_inverse(J, K) * [[1, L_J], [1, L_K]] - Id_16.
double block_inverse_residual(const ImaginaryUnit& J, const ImaginaryUnit& K);

/// Triple (I, J, K) whose eight products 1, I, J, IJ, K, IK, JK, I(JK) form a
/// real basis of O. Construct through make().
class SBasis {
 public:
  /// Throws DomainError("not an s-basis") if the products are (numerically)
  /// linearly dependent.
  static SBasis make(const ImaginaryUnit& I, const ImaginaryUnit& J, const ImaginaryUnit& K);

  const ImaginaryUnit& I() const { return i_; }
  const ImaginaryUnit& J() const { return j_; }
  const ImaginaryUnit& K() const { return k_; }

  /// Products in the order 1, I, J, IJ, K, IK, JK, I(JK). Each product is a
  /// nested left multiplication in written order.
  const std::array<Octonion, 8>& products() const { return products_; }
  /// Columns are the coefficient vectors of products().
  const Mat8& product_matrix() const { return basis_; }

 private:
  SBasis(const ImaginaryUnit& I, const ImaginaryUnit& J, const ImaginaryUnit& K);

  ImaginaryUnit i_, j_, k_;
  std::array<Octonion, 8> products_;
  Mat8 basis_;
};

std::array<Octonion, 8> sbasis_products(const ImaginaryUnit& I, const ImaginaryUnit& J,
                                        const ImaginaryUnit& K);

/// Determinant of the Gram matrix of the eight s-basis products.
double sbasis_gram_determinant(const ImaginaryUnit& I, const ImaginaryUnit& J,
                               const ImaginaryUnit& K);

/// Deterministic completion of I to an s-basis: J is the first of e1..e7 that
/// survives Gram-Schmidt against {1, I}; K the first that survives against
/// {1, I, J, IJ}.
SBasis complete_sbasis(const ImaginaryUnit& I);

}  // namespace octslice
