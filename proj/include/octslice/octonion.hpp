#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace octslice {

/// Raised when an operation is asked to leave its domain of definition
/// (zero divisor, coinciding units, points outside a domain, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Signed basis product e_i e_j = sign * e_index.
struct BasisProduct {
  int sign;
  int index;
};

/// The 8x8 table of basis products generated from the seven oriented
/// triples (1,2,3), (1,4,5), (2,4,6), (3,4,7), (5,3,6), (6,1,7), (7,2,5).
/// Entries are exact integers.
const std::array<std::array<BasisProduct, 8>, 8>& multiplication_table();

/// The oriented triples the table is generated from.
inline constexpr std::array<std::array<int, 3>, 7> kOrientedTriples{{
    {1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {5, 3, 6}, {6, 1, 7}, {7, 2, 5},
}};

/// Real octonion with coefficients w.r.t. e0 = 1, e1, ..., e7.
class Octonion {
 public:
  constexpr Octonion() = default;
  constexpr Octonion(double real) : c_{real, 0, 0, 0, 0, 0, 0, 0} {}  // NOLINT(implicit)
  explicit constexpr Octonion(const std::array<double, 8>& coeffs) : c_(coeffs) {}

  /// The basis element e_i, i in [0, 7].
  static Octonion basis(int i);

  constexpr double operator[](std::size_t i) const { return c_[i]; }
  constexpr double& operator[](std::size_t i) { return c_[i]; }
  constexpr const std::array<double, 8>& coeffs() const { return c_; }

  constexpr double re() const { return c_[0]; }
  Octonion im() const;
  Octonion conj() const;
  double norm2() const;
  double norm() const;
  bool is_zero() const;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(double s);
  Octonion& operator/=(double s);

  friend bool operator==(const Octonion&, const Octonion&) = default;

 private:
  std::array<double, 8> c_{};
};

Octonion operator+(Octonion a, const Octonion& b);
Octonion operator-(Octonion a, const Octonion& b);
Octonion operator-(Octonion a);
Octonion operator*(Octonion a, double s);
Octonion operator*(double s, Octonion a);
Octonion operator/(Octonion a, double s);

/// Bilinear octonion product. Not associative: (ab)c and a(bc) differ in general.
Octonion mul(const Octonion& a, const Octonion& b);
inline Octonion operator*(const Octonion& a, const Octonion& b) { return mul(a, b); }

inline Octonion conj(const Octonion& q) { return q.conj(); }
inline double re(const Octonion& q) { return q.re(); }
inline Octonion im(const Octonion& q) { return q.im(); }
inline double norm(const Octonion& q) { return q.norm(); }

/// conj(q) / |q|^2. Throws DomainError("zero divisor") for q = 0.
Octonion inv(const Octonion& q);

/// Euclidean inner product of coefficient vectors.
double scalar_product(const Octonion& r, const Octonion& s);

/// Largest absolute coefficient difference.
double max_abs_diff(const Octonion& a, const Octonion& b);

std::ostream& operator<<(std::ostream& os, const Octonion& q);

/// Element of the sphere S of imaginary units: Re = 0, |value| = 1.
class ImaginaryUnit {
 public:
  /// Validates Re(v) ~ 0 and |v| ~ 1 (to 1e-9) and stores the exact
  /// renormalized imaginary part.
  explicit ImaginaryUnit(const Octonion& v);

  /// Projects v onto Im(O) and normalizes. Throws if Im(v) = 0.
  static ImaginaryUnit normalized(const Octonion& v);
  /// e_i for i in [1, 7].
  static ImaginaryUnit basis(int i);

  const Octonion& value() const { return value_; }
  operator const Octonion&() const { return value_; }  // NOLINT(implicit)

  ImaginaryUnit operator-() const;

  friend bool operator==(const ImaginaryUnit&, const ImaginaryUnit&) = default;

 private:
  struct Trusted {};
  ImaginaryUnit(const Octonion& v, Trusted) : value_(v) {}

  Octonion value_;
};

/// True when the two units agree to `tol` in every coefficient.
bool same_unit(const ImaginaryUnit& a, const ImaginaryUnit& b, double tol = 1e-12);

}  // namespace octslice
