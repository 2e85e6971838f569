#include "rdbound/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "rdbound/error.hpp"

namespace rdbound {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::ColumnSumMismatch: return "ColumnSumMismatch";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::SymbolicMismatch: return "SymbolicMismatch";
    case ErrorCode::UnsupportedQ: return "UnsupportedQ";
    case ErrorCode::OrthogonalityFailure: return "OrthogonalityFailure";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::InsufficientQuartics: return "InsufficientQuartics";
    case ErrorCode::LadderFormat: return "LadderFormat";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<uint32_t, uint32_t>> prime_power(uint64_t q) {
  if (q < 2) return std::nullopt;
  uint64_t p = 0;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(static_cast<uint32_t>(q), 1u);
  uint32_t f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<uint32_t>(p), f);
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (uint64_t p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

uint64_t ipow(uint64_t base, unsigned exp) {
  uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t mod) {
  unsigned __int128 r = 1 % mod, b = base % mod;
  while (exp) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<uint64_t>(r);
}

std::vector<uint32_t> prime_powers_up_to(uint32_t lo, uint32_t hi) {
  std::vector<uint32_t> out;
  for (uint32_t q = std::max(lo, 2u); q <= hi; ++q)
    if (prime_power(q)) out.push_back(q);
  return out;
}

}  // namespace rdbound
