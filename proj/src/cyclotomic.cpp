#include "rdbound/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "rdbound/error.hpp"
#include "rdbound/numtheory.hpp"

namespace rdbound {

namespace {

uint32_t lcm32(uint32_t a, uint32_t b) { return a / std::gcd(a, b) * b; }

// Reduces a dense vector of length n (indexed by exponent) modulo Phi_n.
std::vector<Rational> reduce_dense(uint32_t n, std::vector<Rational> v) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const size_t deg = phi_poly.size() - 1;
  for (size_t i = v.size(); i-- > deg;) {
    if (sgn(v[i]) == 0) continue;
    Rational c = v[i];
    for (size_t j = 0; j < deg; ++j)
      if (phi_poly[j] != 0) v[i - deg + j] -= c * phi_poly[j];
    v[i] = 0;
  }
  v.resize(deg);
  return v;
}

// Same reduction on integer numerators over a common denominator; returns
// false when intermediate values leave the safe range.
bool reduce_small(uint32_t n, const std::vector<CycNumber::Term>& terms, std::vector<Rational>& out) {
  mpz_class den = 1;
  for (const auto& t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
  if (!den.fits_slong_p()) return false;
  constexpr __int128 kLimit = static_cast<__int128>(1) << 100;
  std::vector<__int128> v(n, 0);
  for (const auto& [e, c] : terms) {
    mpz_class num = c.get_num() * (den / c.get_den());
    if (!num.fits_slong_p()) return false;
    v[e] += num.get_si();
  }
  const auto& phi_poly = cyclotomic_polynomial(n);
  const size_t deg = phi_poly.size() - 1;
  for (size_t i = v.size(); i-- > deg;) {
    const __int128 c = v[i];
    if (c == 0) continue;
    if (c > kLimit / 64 || c < -kLimit / 64) return false;
    for (size_t j = 0; j < deg; ++j)
      if (phi_poly[j] != 0) {
        v[i - deg + j] -= c * phi_poly[j];
        if (v[i - deg + j] > kLimit || v[i - deg + j] < -kLimit) return false;
      }
  }
  out.assign(deg, Rational(0));
  const long d = den.get_si();
  for (size_t i = 0; i < deg; ++i) {
    if (v[i] == 0) continue;
    if (v[i] > INT64_MAX || v[i] < INT64_MIN) return false;
    out[i] = make_rational(static_cast<long>(v[i]), d);
  }
  return true;
}

}  // namespace

const std::vector<int64_t>& cyclotomic_polynomial(uint32_t n) {
  static std::mutex mu;
  static std::map<uint32_t, std::vector<int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (uint64_t d : divisors(n)) {
    if (d == n) continue;
    const auto& den = cyclotomic_polynomial(static_cast<uint32_t>(d));
    // exact division of a monic polynomial by a monic polynomial
    size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<int64_t> quo(dn - dd + 1, 0);
    for (size_t i = dn + 1; i-- > dd;) {
      int64_t c = num[i];
      quo[i - dd] = c;
      if (c == 0) continue;
      for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quo);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

CycNumber::CycNumber(const Rational& r) {
  if (sgn(r) != 0) terms_.emplace_back(0, r);
}

CycNumber::CycNumber(long v) {
  if (v != 0) terms_.emplace_back(0, Rational(v));
}

CycNumber CycNumber::zeta(uint32_t n, int64_t e) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  CycNumber z;
  z.n_ = n;
  z.terms_.emplace_back(static_cast<uint32_t>(mod_floor(e, n)), Rational(1));
  z.normalize();
  return z;
}

CycNumber CycNumber::from_terms(uint32_t n, std::vector<Term> terms) {
  CycNumber z;
  z.n_ = n;
  for (auto& t : terms) t.first %= n;
  z.terms_ = std::move(terms);
  z.normalize();
  return z;
}

CycNumber CycNumber::from_coords(uint32_t n, const std::vector<Rational>& coords) {
  std::vector<Term> terms;
  for (size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) terms.emplace_back(static_cast<uint32_t>(i), coords[i]);
  return from_terms(n, std::move(terms));
}

void CycNumber::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.second) == 0; });
  terms_ = std::move(out);
  uint32_t g = n_;
  for (const auto& t : terms_) g = std::gcd(g, t.first);
  if (terms_.empty()) g = n_;
  if (g > 1) {
    for (auto& t : terms_) t.first /= g;
    n_ /= g;
  }
}

std::vector<Rational> CycNumber::coords() const {
  std::vector<Rational> fast;
  if (reduce_small(n_, terms_, fast)) return fast;
  std::vector<Rational> dense(n_);
  for (const auto& [e, c] : terms_) dense[e] += c;
  return reduce_dense(n_, std::move(dense));
}

CycNumber CycNumber::embed(uint32_t m) const {
  if (m % n_ != 0) throw Error(ErrorCode::InvalidArgument, "embedding conductor must be a multiple");
  CycNumber z;
  z.n_ = m;
  z.terms_ = terms_;
  const uint32_t s = m / n_;
  for (auto& t : z.terms_) t.first *= s;
  return z;
}

CycNumber CycNumber::conj() const { return galois(-1); }

CycNumber CycNumber::galois(int64_t k) const {
  if (std::gcd<int64_t, int64_t>(mod_floor(k, n_), n_) != 1 && n_ > 1)
    throw Error(ErrorCode::InvalidArgument, "Galois exponent must be a unit modulo the conductor");
  CycNumber z;
  z.n_ = n_;
  z.terms_ = terms_;
  for (auto& t : z.terms_) t.first = static_cast<uint32_t>(mod_floor(static_cast<int64_t>(t.first) * k, n_));
  z.normalize();
  return z;
}

bool CycNumber::is_zero() const {
  if (terms_.empty()) return true;
  for (const auto& c : coords())
    if (sgn(c) != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  if (terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0)) return true;
  auto c = coords();
  for (size_t i = 1; i < c.size(); ++i)
    if (sgn(c[i]) != 0) return false;
  return true;
}

Rational CycNumber::to_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].first == 0) return terms_[0].second;
  auto c = coords();
  for (size_t i = 1; i < c.size(); ++i)
    if (sgn(c[i]) != 0) throw Error(ErrorCode::NotRational, to_string() + " is not rational");
  return c[0];
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (o.terms_.empty()) return *this;
  const uint32_t m = lcm32(n_, o.n_);
  if (m != n_) *this = embed(m);
  const uint32_t s = m / o.n_;
  for (const auto& [e, c] : o.terms_) terms_.emplace_back(e * s, c);
  normalize();
  return *this;
}

CycNumber CycNumber::operator-() const {
  CycNumber z = *this;
  for (auto& t : z.terms_) t.second = -t.second;
  return z;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  if (a.terms_.empty() || b.terms_.empty()) return CycNumber();
  const uint32_t m = lcm32(a.n_, b.n_);
  const uint32_t sa = m / a.n_, sb = m / b.n_;
  CycNumber z;
  z.n_ = m;
  if (a.terms_.size() * b.terms_.size() > 2 * m) {
    std::vector<Rational> dense(m);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) dense[(ea * sa + eb * sb) % m] += ca * cb;
    for (uint32_t e = 0; e < m; ++e)
      if (sgn(dense[e]) != 0) z.terms_.emplace_back(e, std::move(dense[e]));
  } else {
    z.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) z.terms_.emplace_back((ea * sa + eb * sb) % m, ca * cb);
  }
  z.normalize();
  return z;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) { return *this = *this * o; }

CycNumber& CycNumber::operator*=(const Rational& r) {
  if (sgn(r) == 0) {
    terms_.clear();
    n_ = 1;
    return *this;
  }
  for (auto& t : terms_) t.second *= r;
  return *this;
}

CycNumber& CycNumber::operator/=(const Rational& r) {
  if (sgn(r) == 0) throw Error(ErrorCode::DivisionByZero, "division of a cyclotomic number by zero");
  for (auto& t : terms_) t.second /= r;
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return CycNumber(Rational(1) / to_rational());
  CycNumber others(1L);
  for (uint32_t k = 2; k < n_; ++k)
    if (std::gcd(k, n_) == 1) others *= galois(k);
  Rational norm = (*this * others).to_rational();
  return others / norm;
}

CycNumber CycNumber::minimize() const {
  const std::vector<Rational> c = coords();
  const size_t rows = c.size();
  for (uint64_t m : divisors(n_)) {
    if (m == n_) break;
    const size_t cols = euler_phi(m);
    // augmented system: columns are zeta_m^j written in the zeta_n basis
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (size_t j = 0; j < cols; ++j) {
      auto col = CycNumber::zeta(n_, static_cast<int64_t>(j * (n_ / m))).embed(n_).coords();
      for (size_t i = 0; i < rows; ++i) a[i][j] = col[i];
    }
    for (size_t i = 0; i < rows; ++i) a[i][cols] = c[i];
    size_t r = 0;
    std::vector<size_t> pivots;
    for (size_t j = 0; j < cols && r < rows; ++j) {
      size_t piv = r;
      while (piv < rows && sgn(a[piv][j]) == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[r], a[piv]);
      Rational inv = 1 / a[r][j];
      for (auto& x : a[r]) x *= inv;
      for (size_t i = 0; i < rows; ++i) {
        if (i == r || sgn(a[i][j]) == 0) continue;
        Rational f = a[i][j];
        for (size_t k = j; k <= cols; ++k) a[i][k] -= f * a[r][k];
      }
      pivots.push_back(j);
      ++r;
    }
    bool consistent = true;
    for (size_t i = r; i < rows; ++i)
      if (sgn(a[i][cols]) != 0) consistent = false;
    if (!consistent) continue;
    std::vector<Rational> y(cols);
    for (size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = a[i][cols];
    return from_coords(static_cast<uint32_t>(m), y);
  }
  return from_coords(n_, c);
}

std::string CycNumber::to_string() const {
  CycNumber m = minimize();
  if (m.n_ == 1) return m.terms_.empty() ? "0" : m.terms_[0].second.get_str();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : m.terms_) {
    Rational a = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << m.n_;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

CycNumber cyc_add(const CycNumber& a, const CycNumber& b) { return a + b; }
CycNumber cyc_mul(const CycNumber& a, const CycNumber& b) { return a * b; }
CycNumber cyc_conj(const CycNumber& a) { return a.conj(); }
Rational to_rational(const CycNumber& a) { return a.to_rational(); }

CycAccumulator::CycAccumulator(uint32_t n) : n_(n), dense_(n) {}

void CycAccumulator::grow(uint32_t m) {
  std::vector<Rational> next(m);
  const uint32_t s = m / n_;
  for (uint32_t e = 0; e < n_; ++e)
    if (sgn(dense_[e]) != 0) next[e * s] = std::move(dense_[e]);
  dense_ = std::move(next);
  n_ = m;
}

void CycAccumulator::add(const CycNumber& x, const Rational& weight) {
  if (x.terms().empty()) return;
  const uint32_t m = lcm32(n_, x.conductor());
  if (m != n_) grow(m);
  const uint32_t s = n_ / x.conductor();
  for (const auto& [e, c] : x.terms()) dense_[e * s] += c * weight;
}

CycNumber CycAccumulator::value() const {
  std::vector<CycNumber::Term> terms;
  for (uint32_t e = 0; e < n_; ++e)
    if (sgn(dense_[e]) != 0) terms.emplace_back(e, dense_[e]);
  return CycNumber::from_terms(n_, std::move(terms));
}

}  // namespace rdbound
