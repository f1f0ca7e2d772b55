#include "quatdec/quaternion.hpp"

#include "quatdec/errors.hpp"

namespace quatdec {

char axis_name(EtaAxis eta) {
  switch (eta) {
    case EtaAxis::I: return 'i';
    case EtaAxis::J: return 'j';
    case EtaAxis::K: return 'k';
  }
  return '?';
}

Quaternion Quaternion::unit(EtaAxis axis) {
  Quaternion q;
  q.axis_coefficient(axis) = 1;
  return q;
}

bool Quaternion::is_zero() const {
  return quatdec::is_zero(w) && quatdec::is_zero(x) && quatdec::is_zero(y) &&
         quatdec::is_zero(z);
}

bool Quaternion::is_real() const {
  return quatdec::is_zero(x) && quatdec::is_zero(y) && quatdec::is_zero(z);
}

const Rational& Quaternion::axis_coefficient(EtaAxis axis) const {
  switch (axis) {
    case EtaAxis::I: return x;
    case EtaAxis::J: return y;
    case EtaAxis::K: return z;
  }
  return x;
}

Rational& Quaternion::axis_coefficient(EtaAxis axis) {
  switch (axis) {
    case EtaAxis::I: return x;
    case EtaAxis::J: return y;
    case EtaAxis::K: return z;
  }
  return x;
}

bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion& operator+=(Quaternion& a, const Quaternion& b) {
  a.w += b.w;
  a.x += b.x;
  a.y += b.y;
  a.z += b.z;
  return a;
}

Quaternion& operator-=(Quaternion& a, const Quaternion& b) {
  a.w -= b.w;
  a.x -= b.x;
  a.y -= b.y;
  a.z -= b.z;
  return a;
}

Quaternion conj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

Rational norm2(const Quaternion& a) {
  return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

Quaternion inverse(const Quaternion& a) {
  if (a.is_zero()) throw DivisionByZeroError{};
  Rational n = norm2(a);
  Quaternion c = conj(a);
  return {c.w / n, c.x / n, c.y / n, c.z / n};
}

Quaternion eta_conj(const Quaternion& a, EtaAxis eta) {
  Quaternion r = a;
  Rational& c = r.axis_coefficient(eta);
  c = -c;
  return r;
}

bool is_eta_hermitian(const Quaternion& a, EtaAxis eta) {
  return is_zero(a.axis_coefficient(eta));
}

bool is_eta_skew(const Quaternion& a, EtaAxis eta) {
  Quaternion r = eta_conj(a, eta);
  return r == -a;
}

}  // namespace quatdec
