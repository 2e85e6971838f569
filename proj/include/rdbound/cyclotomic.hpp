#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rdbound/rational.hpp"

namespace rdbound {

// Element of Q(zeta_n). Values are held as a sparse combination of powers of
// zeta_n (exponents mod n, not reduced by the cyclotomic polynomial); the
// reduced power-basis coordinates are produced on demand by coords().
class CycNumber {
 public:
  using Term = std::pair<uint32_t, Rational>;

  CycNumber() = default;
  CycNumber(const Rational& r);  // NOLINT(implicit)
  CycNumber(long v);             // NOLINT(implicit)
  CycNumber(int v) : CycNumber(static_cast<long>(v)) {}  // NOLINT(implicit)

  static CycNumber zeta(uint32_t n, int64_t e = 1);
  static CycNumber from_coords(uint32_t n, const std::vector<Rational>& coords);
  static CycNumber from_terms(uint32_t n, std::vector<Term> terms);

  uint32_t conductor() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  // Coordinates in the basis 1, zeta_n, ..., zeta_n^{phi(n)-1}.
  std::vector<Rational> coords() const;

  CycNumber embed(uint32_t m) const;
  CycNumber conj() const;
  CycNumber galois(int64_t k) const;
  CycNumber minimize() const;
  CycNumber inverse() const;

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;

  std::string to_string() const;

  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator*=(const Rational& r);
  CycNumber& operator/=(const Rational& r);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(CycNumber a, const Rational& r) { return a *= r; }
  friend CycNumber operator*(const Rational& r, CycNumber a) { return a *= r; }
  friend CycNumber operator/(CycNumber a, const Rational& r) { return a /= r; }
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }
  CycNumber operator-() const;

  friend bool operator==(const CycNumber& a, const CycNumber& b) { return (a - b).is_zero(); }

 private:
  void normalize();

  uint32_t n_ = 1;
  std::vector<Term> terms_;
};

CycNumber cyc_add(const CycNumber& a, const CycNumber& b);
CycNumber cyc_mul(const CycNumber& a, const CycNumber& b);
CycNumber cyc_conj(const CycNumber& a);
Rational to_rational(const CycNumber& a);

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<int64_t>& cyclotomic_polynomial(uint32_t n);

// Accumulates sums of many CycNumbers into a dense array over one conductor.
class CycAccumulator {
 public:
  explicit CycAccumulator(uint32_t n = 1);
  void add(const CycNumber& x, const Rational& weight = Rational(1));
  CycNumber value() const;

 private:
  void grow(uint32_t m);
  uint32_t n_;
  std::vector<Rational> dense_;
};

}  // namespace rdbound
