#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rdbound {

bool is_prime(uint64_t n);

// (p, f) with q = p^f, or nothing when q is not a prime power.
std::optional<std::pair<uint32_t, uint32_t>> prime_power(uint64_t q);

// Prime factors in increasing order, without multiplicity.
std::vector<uint64_t> prime_divisors(uint64_t n);

std::vector<uint64_t> divisors(uint64_t n);

uint64_t euler_phi(uint64_t n);

uint64_t ipow(uint64_t base, unsigned exp);

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t mod);

inline int64_t mod_floor(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<uint32_t> prime_powers_up_to(uint32_t lo, uint32_t hi);

}  // namespace rdbound
