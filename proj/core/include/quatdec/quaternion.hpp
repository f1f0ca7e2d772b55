#pragma once

#include <string>

#include "quatdec/rational.hpp"

namespace quatdec {

// One of the three imaginary units i, j, k selecting the eta-involution.
enum class EtaAxis { I, J, K };

char axis_name(EtaAxis eta);

/// Quaternion w + x*i + y*j + z*k with exact rational coefficients.
/// Multiplication follows i^2 = j^2 = k^2 = ijk = -1 and is noncommutative.
struct Quaternion {
  Rational w, x, y, z;

  Quaternion() : w(0), x(0), y(0), z(0) {}
  Quaternion(Rational w, Rational x, Rational y, Rational z)
      : w(std::move(w)), x(std::move(x)), y(std::move(y)), z(std::move(z)) {}

  static Quaternion real(Rational r) { return {std::move(r), 0, 0, 0}; }
  static Quaternion unit(EtaAxis axis);
  static Quaternion zero() { return {}; }
  static Quaternion one() { return real(1); }

  bool is_zero() const;
  bool is_real() const;

  // Coefficient of the given imaginary unit.
  const Rational& axis_coefficient(EtaAxis axis) const;
  Rational& axis_coefficient(EtaAxis axis);
};

bool operator==(const Quaternion& a, const Quaternion& b);
bool operator!=(const Quaternion& a, const Quaternion& b);

Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a);

// Hamilton product; left factor stays on the left.
Quaternion operator*(const Quaternion& a, const Quaternion& b);

Quaternion& operator+=(Quaternion& a, const Quaternion& b);
Quaternion& operator-=(Quaternion& a, const Quaternion& b);

Quaternion conj(const Quaternion& a);

// w^2 + x^2 + y^2 + z^2, zero only for the zero quaternion.
Rational norm2(const Quaternion& a);

// Two-sided inverse; throws DivisionByZeroError on zero input.
Quaternion inverse(const Quaternion& a);

// The scalar eta-conjugate -eta * conj(a) * eta: negates the eta-axis
// coefficient and fixes the other three.
Quaternion eta_conj(const Quaternion& a, EtaAxis eta);

// a is fixed by eta_conj, i.e. the eta-axis coefficient vanishes.
bool is_eta_hermitian(const Quaternion& a, EtaAxis eta);

// eta_conj(a) == -a, i.e. a is a rational multiple of eta.
bool is_eta_skew(const Quaternion& a, EtaAxis eta);

}  // namespace quatdec
