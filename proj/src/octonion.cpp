#include "octslice/octonion.hpp"

#include <cmath>
#include <ostream>

namespace octslice {

namespace {

using Table = std::array<std::array<BasisProduct, 8>, 8>;

Table build_table() {
  Table t{};
  for (int i = 0; i < 8; ++i) {
    t[0][i] = {1, i};
    t[i][0] = {1, i};
  }
  for (int i = 1; i < 8; ++i) t[i][i] = {-1, 0};
  for (const auto& tr : kOrientedTriples) {
    // Cyclic rotations carry sign +1, the reversed ones -1.
    for (int r = 0; r < 3; ++r) {
      const int a = tr[r], b = tr[(r + 1) % 3], c = tr[(r + 2) % 3];
      t[a][b] = {1, c};
      t[b][a] = {-1, c};
    }
  }
  return t;
}

}  // namespace

const Table& multiplication_table() {
  static const Table table = build_table();
  return table;
}

Octonion Octonion::basis(int i) {
  if (i < 0 || i > 7) throw std::out_of_range("octonion basis index must be in [0, 7]");
  Octonion e;
  e.c_[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

Octonion Octonion::im() const {
  Octonion r = *this;
  r.c_[0] = 0.0;
  return r;
}

Octonion Octonion::conj() const {
  Octonion r = *this;
  for (std::size_t i = 1; i < 8; ++i) r.c_[i] = -r.c_[i];
  return r;
}

double Octonion::norm2() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return s;
}

double Octonion::norm() const { return std::sqrt(norm2()); }

bool Octonion::is_zero() const {
  for (double v : c_)
    if (v != 0.0) return false;
  return true;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

Octonion& Octonion::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Octonion& Octonion::operator/=(double s) {
  for (double& v : c_) v /= s;
  return *this;
}

Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
Octonion operator-(Octonion a) { return a *= -1.0; }
Octonion operator*(Octonion a, double s) { return a *= s; }
Octonion operator*(double s, Octonion a) { return a *= s; }
Octonion operator/(Octonion a, double s) { return a /= s; }

Octonion mul(const Octonion& a, const Octonion& b) {
  const auto& t = multiplication_table();
  std::array<double, 8> out{};
  for (std::size_t i = 0; i < 8; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      const BasisProduct p = t[i][j];
      out[static_cast<std::size_t>(p.index)] += p.sign * a[i] * b[j];
    }
  }
  return Octonion(out);
}

Octonion inv(const Octonion& q) {
  const double n2 = q.norm2();
  if (n2 == 0.0) throw DomainError("zero divisor");
  return q.conj() / n2;
}

double scalar_product(const Octonion& r, const Octonion& s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < 8; ++i) acc += r[i] * s[i];
  return acc;
}

double max_abs_diff(const Octonion& a, const Octonion& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 8; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::ostream& operator<<(std::ostream& os, const Octonion& q) {
  os << '(';
  for (std::size_t i = 0; i < 8; ++i) os << (i ? ", " : "") << q[i];
  return os << ')';
}

ImaginaryUnit::ImaginaryUnit(const Octonion& v) {
  constexpr double kTol = 1e-9;
  if (std::abs(v.re()) > kTol || std::abs(v.norm() - 1.0) > kTol)
    throw DomainError("not an imaginary unit: need Re(v) = 0 and |v| = 1");
  const Octonion w = v.im();
  value_ = w / w.norm();
}

ImaginaryUnit ImaginaryUnit::normalized(const Octonion& v) {
  const Octonion w = v.im();
  const double n = w.norm();
  if (n == 0.0) throw DomainError("cannot normalize a real octonion to an imaginary unit");
  return ImaginaryUnit(w / n, Trusted{});
}

ImaginaryUnit ImaginaryUnit::basis(int i) {
  if (i < 1 || i > 7) throw std::out_of_range("imaginary basis index must be in [1, 7]");
  return ImaginaryUnit(Octonion::basis(i), Trusted{});
}

ImaginaryUnit ImaginaryUnit::operator-() const { return ImaginaryUnit(-value_, Trusted{}); }

bool same_unit(const ImaginaryUnit& a, const ImaginaryUnit& b, double tol) {
  return max_abs_diff(a.value(), b.value()) <= tol;
}

}  // namespace octslice
