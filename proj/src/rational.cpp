#include "rdbound/rational.hpp"

#include "rdbound/error.hpp"

namespace rdbound {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw Error(ErrorCode::NonIntegerResult, "value " + to_string(r) + " is not an integer");
  const Integer& n = r.get_num();
  if (!n.fits_slong_p()) throw Error(ErrorCode::NonIntegerResult, "integer " + n.get_str() + " out of range");
  return n.get_si();
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace rdbound
