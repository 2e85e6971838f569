#include <algorithm>

#include "doctest.h"
#include "rdbound/error.hpp"
#include "rdbound/ffield.hpp"
#include "rdbound/numtheory.hpp"
#include "rdbound/sl2_chars.hpp"

using namespace rdbound;

TEST_CASE("class data") {
  CHECK(sl2_class_data(5).classes.size() == 9);
  CHECK(sl2_class_data(4).classes.size() == 5);
  for (uint32_t q : {4u, 7u, 9u, 16u}) {
    const auto cd = sl2_class_data(q);
    const auto& id = cd.classes[cd.index_of("1")];
    CHECK(id.size == 1);
    CHECK(id.centralizer_order == static_cast<uint64_t>(q) * (q * q - 1));
    uint64_t total = 0;
    for (const auto& c : cd.classes) total += c.size;
    CHECK(total == cd.group_order);
  }
  CHECK_THROWS_AS(sl2_class_data(12), Error);
}

TEST_CASE("character tables") {
  const auto cd = sl2_class_data(5);
  const auto t = sl2_character_table(cd);
  auto deg = t.degrees;
  std::sort(deg.begin(), deg.end());
  CHECK(deg == std::vector<int64_t>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  const auto t7 = sl2_character_table(sl2_class_data(7));
  int64_t sq = 0;
  for (int64_t d : t7.degrees) sq += d * d;
  CHECK(sq == 336);
  for (const auto& row : t.rows) CHECK(row.size() == cd.classes.size());
  CHECK(t.rows.size() == cd.classes.size());
  for (const auto& v : t.rows[0]) CHECK(v == CycNumber(1));
}

TEST_CASE("orthogonality for small and odd-power q") {
  for (uint32_t q : {2u, 3u, 8u, 9u, 25u, 27u, 32u}) {
    const auto cd = sl2_class_data(q);
    CHECK_NOTHROW(sl2_character_table(cd, true));
  }
}

TEST_CASE("square roots of eps q") {
  for (uint32_t q : {3u, 5u, 7u, 9u, 27u, 25u}) {
    const auto [p, f] = *prime_power(q);
    const CycNumber s = sqrt_eps_q(p, f);
    const int64_t eps = (q % 4 == 1) ? 1 : -1;
    CHECK(s * s == CycNumber(eps * static_cast<long>(q)));
  }
}

TEST_CASE("selected projective representation") {
  CHECK(smallest_projective_character(7).degree == 3);
  CHECK(smallest_projective_character(8).degree == 7);
  CHECK(smallest_projective_character(13).degree == 6);
  CHECK(smallest_projective_character(4).degree == 3);
  CHECK(smallest_projective_character(9).degree == 4);
}

TEST_CASE("matrix classification matches the representatives") {
  for (uint32_t q : {4u, 5u, 8u, 9u, 11u}) {
    const auto [p, f] = *prime_power(q);
    const auto cd = sl2_class_data(q);
    const auto F = make_field(p, f);
    for (size_t i = 0; i < cd.classes.size(); ++i)
      CHECK(classify_matrix(cd, *F, class_representative(cd, *F, static_cast<int>(i))) == static_cast<int>(i));
  }
}
