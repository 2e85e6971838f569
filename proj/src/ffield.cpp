#include "rdbound/ffield.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "rdbound/error.hpp"
#include "rdbound/numtheory.hpp"

namespace rdbound {

namespace {

using Poly = std::vector<uint32_t>;  // coefficients over F_p, lowest first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
  trim(a);
  const size_t db = b.size() - 1;
  const uint32_t lead_inv = static_cast<uint32_t>(powmod(b.back(), p - 2, p));
  while (a.size() >= b.size()) {
    uint64_t c = static_cast<uint64_t>(a.back()) * lead_inv % p;
    size_t shift = a.size() - 1 - db;
    for (size_t j = 0; j <= db; ++j)
      a[shift + j] = static_cast<uint32_t>((a[shift + j] + (p - c) * b[j]) % p);
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, uint32_t p) {
  const uint32_t m = static_cast<uint32_t>(f.size() - 1);
  if (m <= 1) return true;
  for (uint32_t d = 1; d <= m / 2; ++d) {
    const uint64_t count = ipow(p, d);
    for (uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      uint64_t c = code;
      for (uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(uint32_t p, uint32_t m) : p_(p), m_(m), size_(static_cast<uint32_t>(ipow(p, m))) {
  const uint64_t candidates = ipow(p, m);
  for (uint64_t code = 0; code < candidates; ++code) {
    Poly f(m + 1);
    uint64_t c = code;
    for (uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<uint32_t>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }
  minus_one_ = p - 1;
  const uint64_t order = size_ - 1;
  const auto primes = prime_divisors(order);
  for (Elem g = 1; g < size_; ++g) {
    bool primitive = true;
    for (uint64_t r : primes)
      if (slow_pow(g, order / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen_ = g;
      break;
    }
  }
  if (slow_pow(gen_, order) != 1) throw Error(ErrorCode::InvalidArgument, "generator construction failed");
  if (size_ < kTableSize) {
    exp_.resize(2 * order);
    log_.assign(size_, 0);
    Elem x = 1;
    for (uint64_t i = 0; i < order; ++i) {
      exp_[i] = exp_[i + order] = x;
      log_[x] = static_cast<uint32_t>(i);
      x = poly_mul(x, gen_);
    }
    zech_.assign(order, -1);
    for (uint64_t d = 0; d < order; ++d) {
      Elem s = digit_add(1, exp_[d]);
      if (s != 0) zech_[d] = static_cast<int32_t>(log_[s]);
    }
  }
}

std::shared_ptr<const Field> Field::make(uint32_t p, uint32_t m) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "field degree must be positive");
  uint64_t size = 1;
  for (uint32_t i = 0; i < m; ++i) {
    size *= p;
    if (size > kMaxSize) throw Error(ErrorCode::SizeExceeded, "field of size " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^24");
  }
  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, m}];
  if (!slot) slot = std::shared_ptr<const Field>(new Field(p, m));
  return slot;
}

Field::Elem Field::digit_add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0, scale = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Field::Elem Field::poly_mul(Elem a, Elem b) const {
  if (m_ == 1) return static_cast<Elem>(static_cast<uint64_t>(a) * b % p_);
  Poly pa = coeffs(a), pb = coeffs(b);
  Poly prod(2 * m_ - 1, 0);
  for (uint32_t i = 0; i < m_; ++i) {
    if (!pa[i]) continue;
    for (uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(pa[i]) * pb[j]) % p_);
  }
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(m_, 0);
  return from_coeffs(r);
}

Field::Elem Field::slow_pow(Elem a, uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = poly_mul(r, a);
    a = poly_mul(a, a);
    e >>= 1;
  }
  return r;
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (!tabulated()) return digit_add(a, b);
  if (a == 0) return b;
  if (b == 0) return a;
  uint32_t la = log_[a], lb = log_[b];
  if (la > lb) std::swap(la, lb);
  int32_t z = zech_[lb - la];
  return z < 0 ? 0 : exp_[la + static_cast<uint32_t>(z)];
}

Field::Elem Field::neg(Elem a) const {
  if (p_ == 2 || a == 0) return a;
  return mul(a, minus_one_);
}

Field::Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (tabulated()) return exp_[log_[a] + log_[b]];
  return poly_mul(a, b);
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  if (tabulated()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return slow_pow(a, size_ - 2);
}

Field::Elem Field::pow(Elem a, int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorCode::ZeroElement, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const int64_t order = size_ - 1;
  const uint64_t r = static_cast<uint64_t>(mod_floor(e, order));
  if (tabulated()) return exp_[static_cast<uint64_t>(log_[a]) * r % order];
  return slow_pow(a, r);
}

Field::Elem Field::frobenius(Elem a, uint64_t pk) const {
  if (a == 0) return 0;
  return pow(a, static_cast<int64_t>(pk % (size_ - 1 == 0 ? 1 : size_ - 1)));
}

Field::Elem Field::exp(int64_t e) const {
  const int64_t order = size_ - 1;
  const uint64_t r = static_cast<uint64_t>(mod_floor(e, order));
  if (tabulated()) return exp_[r];
  return slow_pow(gen_, r);
}

uint64_t Field::dlog(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "discrete log of zero");
  if (tabulated()) return log_[a];
  const uint64_t order = size_ - 1;
  uint64_t s = 1;
  while (s * s < order) ++s;
  std::unordered_map<Elem, uint64_t> baby;
  Elem x = 1;
  for (uint64_t j = 0; j < s; ++j) {
    baby.emplace(x, j);
    x = poly_mul(x, gen_);
  }
  const Elem giant = slow_pow(slow_pow(gen_, s), order - 1);
  Elem y = a;
  for (uint64_t i = 0; i <= s; ++i) {
    auto it = baby.find(y);
    if (it != baby.end()) return (i * s + it->second) % order;
    y = poly_mul(y, giant);
  }
  throw Error(ErrorCode::InvalidArgument, "discrete log failed");
}

Field::Elem Field::from_int(int64_t v) const { return static_cast<Elem>(mod_floor(v, p_)); }

std::vector<uint32_t> Field::coeffs(Elem a) const {
  std::vector<uint32_t> c(m_);
  for (uint32_t i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Field::Elem Field::from_coeffs(const std::vector<uint32_t>& c) const {
  Elem r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * p_ + c[i] % p_;
  return r;
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) os << " + ";
    if (modulus_[i] != 1 || i == 0) os << modulus_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << size_ << " = F_" << p_ << "[x]/(" << modulus_string() << "), generator code " << gen_;
  return os.str();
}

std::shared_ptr<const Field> make_field(uint32_t p, uint32_t m) { return Field::make(p, m); }

FieldElement frobenius(const FieldElement& a, uint64_t pk) {
  auto f = Field::make(a.field().p(), a.field().m());
  return {f, a.field().frobenius(a.code(), pk)};
}

uint64_t discrete_log(const FieldElement& a) { return a.field().dlog(a.code()); }

const std::vector<Field::Elem>& subfield_embedding(const Field& small, const Field& big) {
  if (small.p() != big.p() || big.m() % small.m() != 0)
    throw Error(ErrorCode::InvalidArgument, "not a subfield");
  static std::mutex mu;
  static std::map<std::tuple<uint32_t, uint32_t, uint32_t>, std::vector<Field::Elem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{small.p(), small.m(), big.m()}];
  if (!slot.empty()) return slot;
  const auto& f = small.modulus();
  Field::Elem root = 0;
  for (Field::Elem r = 0; r < big.size(); ++r) {
    Field::Elem acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = big.add(big.mul(acc, r), big.from_int(f[i]));
    if (acc == 0) {
      root = r;
      break;
    }
  }
  slot.resize(small.size());
  for (Field::Elem a = 0; a < small.size(); ++a) {
    auto c = small.coeffs(a);
    Field::Elem acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, root), big.from_int(c[i]));
    slot[a] = acc;
  }
  return slot;
}

}  // namespace rdbound
