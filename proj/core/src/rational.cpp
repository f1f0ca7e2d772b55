#include "quatdec/rational.hpp"

#include "quatdec/errors.hpp"

namespace quatdec {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZeroError{};
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

bool is_zero(const Rational& r) { return sgn(r) == 0; }

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace quatdec
