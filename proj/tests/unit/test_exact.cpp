#include <random>

#include "doctest.h"
#include "rdbound/cyclotomic.hpp"
#include "rdbound/error.hpp"
#include "rdbound/numtheory.hpp"
#include "rdbound/rational.hpp"

using namespace rdbound;

TEST_CASE("number theory helpers") {
  CHECK(is_prime(197));
  CHECK_FALSE(is_prime(1));
  CHECK(prime_power(125) == std::make_pair(5u, 3u));
  CHECK_FALSE(prime_power(6).has_value());
  CHECK_FALSE(prime_power(1).has_value());
  CHECK(euler_phi(36) == 12);
  CHECK(divisors(12) == std::vector<uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(powmod(3, 200, 1000003) == powmod(9, 100, 1000003));
  CHECK(prime_powers_up_to(2, 16) == std::vector<uint32_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16});
  CHECK(prime_powers_up_to(2, 197).size() == 59);
}

TEST_CASE("rationals convert exactly") {
  CHECK(to_int64(make_rational(12, 4)) == 3);
  CHECK_THROWS_AS(to_int64(make_rational(1, 2)), Error);
  CHECK(is_integer(make_rational(-6, 3)));
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
}

TEST_CASE("root of unity identities") {
  CHECK(CycNumber::zeta(3) + CycNumber::zeta(3, 2) == CycNumber(-1));
  CHECK(CycNumber::zeta(4) * CycNumber::zeta(4) == CycNumber(-1));
  CHECK(cyc_conj(CycNumber::zeta(5)) == CycNumber::zeta(5, 4));
  CHECK(to_rational(CycNumber::zeta(3) + CycNumber::zeta(3, 2) + 1) == 0);
  CHECK(to_rational(CycNumber(make_rational(7, 2))) == make_rational(7, 2));
  try {
    to_rational(CycNumber::zeta(5));
    FAIL("expected NotRational");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRational);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<int64_t>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient other than 0, 1, -1.
  const auto& p = cyclotomic_polynomial(105);
  CHECK(p.size() == 49);
  CHECK(std::find(p.begin(), p.end(), -2) != p.end());
}

TEST_CASE("random field arithmetic is exact") {
  std::mt19937_64 rng(7);
  for (uint32_t n : {5u, 12u, 21u, 60u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto random_elem = [&] {
        CycNumber x;
        for (int i = 0; i < 4; ++i)
          x += CycNumber::zeta(n, static_cast<int64_t>(rng() % n)) * make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
        return x;
      };
      const CycNumber a = random_elem(), b = random_elem();
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a * b) / b == a);
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(a.galois(1) == a);
    }
  }
}

TEST_CASE("embedding into a larger conductor keeps values") {
  const CycNumber a = CycNumber::zeta(3) * make_rational(2) + 1;
  const CycNumber b = a.embed(12);
  CHECK(b.conductor() == 12);
  CHECK(b == a);
  CHECK(CycNumber::zeta(12, 4) == CycNumber::zeta(3));
  CHECK((CycNumber::zeta(3) - CycNumber::zeta(3, 2)) * (CycNumber::zeta(3) - CycNumber::zeta(3, 2)) == CycNumber(-3));
}
