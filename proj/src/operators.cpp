#include "octslice/operators.hpp"

#include <cmath>
#include <vector>

namespace octslice {

Vec8 to_vec(const Octonion& q) {
  Vec8 v;
  for (int i = 0; i < 8; ++i) v(i) = q[static_cast<std::size_t>(i)];
  return v;
}

Octonion from_vec(const Vec8& v) {
  Octonion q;
  for (int i = 0; i < 8; ++i) q[static_cast<std::size_t>(i)] = v(i);
  return q;
}

LeftMultOperator left_mult_matrix(const Octonion& q) {
  const auto& t = multiplication_table();
  Mat8 m = Mat8::Zero();
  for (int i = 0; i < 8; ++i) {
    const double qi = q[static_cast<std::size_t>(i)];
    if (qi == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      const BasisProduct p = t[i][j];
      m(p.index, j) += p.sign * qi;
    }
  }
  return LeftMultOperator(m);
}

LeftMultOperator difference_inverse(const ImaginaryUnit& J, const ImaginaryUnit& K) {
  const Octonion w = J.value() - K.value();
  const double n2 = w.norm2();
  if (n2 == 0.0) throw DomainError("units must differ");
  return LeftMultOperator(-left_mult_matrix(w).matrix() / n2);
}

double verify_cjk(const ImaginaryUnit& J, const ImaginaryUnit& K) {
  const LeftMultOperator d = difference_inverse(J, K);
  const LeftMultOperator lj = left_mult_matrix(J);
  const LeftMultOperator lk = left_mult_matrix(K);
  const Mat8 lhs = (d * lj).matrix();
  const Mat8 rhs = -(lk * d).matrix();
  return (lhs - rhs).norm();
}

Mat16 BlockOperator2::matrix() const {
  Mat16 m;
  m.block<8, 8>(0, 0) = a11.matrix();
  m.block<8, 8>(0, 8) = a12.matrix();
  m.block<8, 8>(8, 0) = a21.matrix();
  m.block<8, 8>(8, 8) = a22.matrix();
  return m;
}

std::array<Octonion, 2> BlockOperator2::apply(const Octonion& top, const Octonion& bottom) const {
  const Vec8 t = to_vec(top), b = to_vec(bottom);
  return {from_vec(a11.matrix() * t + a12.matrix() * b),
          from_vec(a21.matrix() * t + a22.matrix() * b)};
}

BlockOperator2 slice_pair_matrix(const ImaginaryUnit& J, const ImaginaryUnit& K) {
  return {LeftMultOperator::identity(), left_mult_matrix(J), LeftMultOperator::identity(),
          left_mult_matrix(K)};
}

BlockOperator2 block_inverse(const ImaginaryUnit& J, const ImaginaryUnit& K) {
  const LeftMultOperator djk = difference_inverse(J, K);
  const LeftMultOperator dkj = (-1.0) * djk;
  return {djk * left_mult_matrix(J), dkj * left_mult_matrix(K), djk, dkj};
}

double block_inverse_residual(const ImaginaryUnit& J, const ImaginaryUnit& K) {
  const Mat16 prod = block_inverse(J, K).matrix() * slice_pair_matrix(J, K).matrix();
  return (prod - Mat16::Identity()).cwiseAbs().maxCoeff();
}

std::array<Octonion, 8> sbasis_products(const ImaginaryUnit& I, const ImaginaryUnit& J,
                                        const ImaginaryUnit& K) {
  const Octonion& i = I.value();
  const Octonion& j = J.value();
  const Octonion& k = K.value();
  const Octonion jk = j * k;
  return {Octonion(1.0), i, j, i * j, k, i * k, jk, i * jk};
}

namespace {

Mat8 products_matrix(const std::array<Octonion, 8>& p) {
  Mat8 m;
  for (int c = 0; c < 8; ++c) m.col(c) = to_vec(p[static_cast<std::size_t>(c)]);
  return m;
}

}  // namespace

double sbasis_gram_determinant(const ImaginaryUnit& I, const ImaginaryUnit& J,
                               const ImaginaryUnit& K) {
  const Mat8 b = products_matrix(sbasis_products(I, J, K));
  return (b.transpose() * b).determinant();
}

SBasis::SBasis(const ImaginaryUnit& I, const ImaginaryUnit& J, const ImaginaryUnit& K)
    : i_(I), j_(J), k_(K), products_(sbasis_products(I, J, K)), basis_(products_matrix(products_)) {}

SBasis SBasis::make(const ImaginaryUnit& I, const ImaginaryUnit& J, const ImaginaryUnit& K) {
  // All eight products are unit vectors, so the Gram determinant lies in
  // [0, 1] and equals 1 exactly for orthonormal products.
  if (sbasis_gram_determinant(I, J, K) < 1e-10) throw DomainError("not an s-basis");
  return SBasis(I, J, K);
}

namespace {

// First e_k (k = 1..7) whose component orthogonal to `span` has norm above
// `threshold`, normalized.
ImaginaryUnit first_orthogonal_unit(const std::vector<Octonion>& span) {
  constexpr double kThreshold = 0.1;
  for (int k = 1; k <= 7; ++k) {
    Octonion v = Octonion::basis(k);
    for (const Octonion& s : span) v -= scalar_product(v, s) / s.norm2() * s;
    if (v.norm() > kThreshold) return ImaginaryUnit::normalized(v);
  }
  throw std::logic_error("no basis unit survives Gram-Schmidt");
}

// Gram-Schmidt over a possibly non-orthogonal list.
std::vector<Octonion> orthogonalize(const std::vector<Octonion>& in) {
  std::vector<Octonion> out;
  for (Octonion v : in) {
    for (const Octonion& s : out) v -= scalar_product(v, s) / s.norm2() * s;
    if (v.norm() > 1e-12) out.push_back(v);
  }
  return out;
}

}  // namespace

SBasis complete_sbasis(const ImaginaryUnit& I) {
  const ImaginaryUnit J = first_orthogonal_unit({Octonion(1.0), I.value()});
  const ImaginaryUnit K =
      first_orthogonal_unit(orthogonalize({Octonion(1.0), I.value(), J.value(), I.value() * J.value()}));
  return SBasis::make(I, J, K);
}

}  // namespace octslice
