#include <set>

#include "doctest.h"
#include "rdbound/error.hpp"
#include "rdbound/ffield.hpp"
#include "rdbound/matrix.hpp"
#include "rdbound/numtheory.hpp"

using namespace rdbound;

TEST_CASE("field construction") {
  CHECK(make_field(3, 2)->size() == 9);
  auto f2 = make_field(2, 1);
  CHECK(f2->size() == 2);
  CHECK(f2->generator() == 1);
  auto f25 = make_field(5, 2);
  FieldElement g(f25, f25->generator());
  uint64_t order = 1;
  for (auto x = g; !(x == FieldElement(f25, 1)); x = x * g) ++order;
  CHECK(order == 24);
  CHECK(make_field(5, 2) == f25);
  CHECK_THROWS_AS(make_field(4, 1), Error);
}

TEST_CASE("generators are primitive for every field used") {
  for (uint32_t q : prime_powers_up_to(2, 197)) {
    const auto [p, f] = *prime_power(q);
    for (uint32_t m : {f, 2 * f}) {
      const auto F = make_field(p, m);
      const uint64_t n = F->size() - 1;
      bool primitive = true;
      for (uint64_t r : prime_divisors(n))
        if (F->pow(F->generator(), static_cast<int64_t>(n / r)) == 1) primitive = false;
      CHECK_MESSAGE(primitive, "p=" << p << " m=" << m);
    }
  }
}

TEST_CASE("frobenius and discrete log") {
  auto f9 = make_field(3, 2);
  for (uint32_t a = 0; a < 9; ++a) {
    FieldElement x(f9, a);
    CHECK(frobenius(frobenius(x, 3), 3) == x);
  }
  auto f4 = make_field(2, 2);
  int fixed = 0;
  for (uint32_t a = 0; a < 4; ++a) fixed += frobenius(FieldElement(f4, a), 2) == FieldElement(f4, a);
  CHECK(fixed == 2);
  auto f25 = make_field(5, 2);
  FieldElement g(f25, f25->generator());
  CHECK(discrete_log(g) == 1);
  CHECK(discrete_log(FieldElement(f25, 1)) == 0);
  CHECK(discrete_log(g * g * g * g * g) == 5);
}

TEST_CASE("norm map onto the prime subfield units") {
  for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto [p, f] = *prime_power(q);
    const auto F = make_field(p, 2 * f);
    std::set<Field::Elem> image;
    for (Field::Elem a = 1; a < F->size(); ++a) {
      if (a == 0) continue;
      image.insert(F->mul(a, F->frobenius(a, q)));
    }
    CHECK(image.size() == q - 1);
    for (auto v : image) CHECK(F->frobenius(v, q) == v);
  }
}

TEST_CASE("3x3 matrix helpers") {
  auto F = make_field(7, 1);
  Mat3 a = identity_matrix<3>();
  a(0, 1) = 3;
  a(1, 2) = 5;
  CHECK(det(*F, a) == 1);
  CHECK(mat_mul(*F, a, inverse(*F, a)) == identity_matrix<3>());
  CHECK(rank(*F, a) == 3);
  Mat3 n = a;
  for (int i = 0; i < 3; ++i) n(i, i) = 0;
  CHECK(rank(*F, n) == 2);
  CHECK(mat_pow(*F, a, 7) == identity_matrix<3>());
}
