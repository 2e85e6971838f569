#include <random>

#include "doctest.h"
#include "rdbound/molien.hpp"
#include "rdbound/numtheory.hpp"

using namespace rdbound;

namespace {

std::vector<int64_t> as_ints(const std::vector<Integer>& v) {
  std::vector<int64_t> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

TEST_CASE("symmetric power characters") {
  const CycNumber a = CycNumber::zeta(7) + 2, b = CycNumber::zeta(7, 3) - 1;
  CHECK(sym_power_char({a}, 1) == a);
  CHECK(sym_power_char({a, b}, 2) == (a * a + b) / Rational(2));
  for (long n : {1L, 3L, 6L, 20L}) {
    std::vector<CycNumber> id(4, CycNumber(n));
    CHECK(sym_power_char(id, 4) == CycNumber(Rational(binomial(n + 3, 4))));
    CHECK(sym_power_char_direct(id, 3) == CycNumber(Rational(binomial(n + 2, 3))));
  }
  std::vector<CycNumber> fixed(3, CycNumber(1));
  CHECK(sym_power_char_direct(fixed, 3) == CycNumber(1));
}

TEST_CASE("recursion agrees with the explicit formulas on random inputs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const uint32_t n = 3 + rng() % 20;
    std::vector<CycNumber> v;
    for (int i = 0; i < 4; ++i)
      v.push_back(CycNumber::zeta(n, static_cast<int64_t>(rng() % n)) * make_rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3) +
                  make_rational(static_cast<long>(rng() % 7) - 3));
    CHECK(sym_power_char(v, 3) == sym_power_char_direct(v, 3));
    CHECK(sym_power_char(v, 4) == sym_power_char_direct(v, 4));
  }
}

TEST_CASE("closed form m4") {
  CHECK(closed_form_m4(7) == 1);
  CHECK(closed_form_m4(8) == 3);
  CHECK(closed_form_m4(16) == 3);
  CHECK(closed_form_m4(5) == 2);
  CHECK(closed_form_m4(9) == 1);
}

TEST_CASE("PSL(2,q) Molien prefixes") {
  CHECK(as_ints(molien_prefix(psl2_molien_input(7, 8), 8)) == std::vector<int64_t>{1, 0, 0, 0, 1, 0, 1, 0, 1});
  const auto m71 = as_ints(molien_prefix(psl2_molien_input(71, 6), 6));
  CHECK(m71[4] == 3);
  CHECK(m71[5] == 2);
  CHECK(m71[6] == 40);
  const auto m13 = as_ints(molien_prefix(psl2_molien_input(13, 10), 10));
  CHECK(m13[4] == 1);
  CHECK(m13[8] == 2);
  for (int k : {1, 2, 3, 5, 6, 7, 9}) CHECK(m13[k] == 0);
}

TEST_CASE("PSU(3,q) Molien prefixes") {
  CHECK(as_ints(molien_prefix(psu3_molien_input(5, 4), 4)) == std::vector<int64_t>{1, 0, 0, 0, 2});
  CHECK(as_ints(psu3_symbolic_prefix(5)) == std::vector<int64_t>{1, 0, 0, 0, 2});
  for (uint32_t q : prime_powers_up_to(3, 40)) {
    const auto input = psu3_molien_input(q, 6);
    CHECK(invariant_dimension(input, 0) == 1);
    const auto m = molien_prefix(input, 6);
    CHECK(m[1] == 0);
    CHECK(m[2] == 0);
    CHECK(m[3] == 0);
    CHECK(m[4] == closed_form_m4(q));
    for (const auto& x : m) CHECK(x >= 0);
  }
}
