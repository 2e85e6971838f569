#include <map>
#include <set>

#include "doctest.h"
#include "rdbound/error.hpp"
#include "rdbound/numtheory.hpp"
#include "rdbound/oracle.hpp"
#include "rdbound/psu3_data.hpp"
#include "rdbound/psu3_reps.hpp"

using namespace rdbound;
using T = ClassType;

TEST_CASE("class spectrum at q = 3") {
  const auto s = class_spectrum(3);
  CHECK(s.d == 1);
  CHECK(s.group_order == 6048);
  const std::vector<int64_t> counts = {1, 1, 1, 3, 3, 0, 1, 2, 2};
  const std::vector<int64_t> cents = {6048, 108, 9, 96, 12, 0, 16, 8, 7};
  for (auto t : kAllTypes) {
    CHECK(s.at(t).count == counts[idx(t)]);
    if (s.at(t).count) CHECK(s.at(t).centralizer_order == cents[idx(t)]);
  }
  CHECK(s.total_classes() == 14);
}

TEST_CASE("class spectrum at q = 5") {
  const auto s = class_spectrum(5);
  CHECK(s.d == 3);
  CHECK(s.at(T::C1).chi_v == 20);
  CHECK(s.at(T::C2).chi_v == -5);
  CHECK(s.at(T::C6p).count == 1);
}

TEST_CASE("class equation for every q") {
  for (uint32_t q : prime_powers_up_to(2, 197)) {
    const auto s = class_spectrum(q);
    Rational total = 0;
    for (auto t : kAllTypes) {
      CHECK(s.at(t).count >= 0);
      if (s.at(t).count) total += Rational(s.group_order * s.at(t).count, s.at(t).centralizer_order);
    }
    total.canonicalize();
    CHECK_MESSAGE(total == Rational(psu3_order(q)), "q=" << q);
  }
}

TEST_CASE("symbolic power tables") {
  auto s7 = symbolic_power_table(7, 2);
  CHECK(s7[idx(T::C1)][idx(T::C4)] == 1);
  CHECK(s7[idx(T::C4)][idx(T::C4)] == 6);
  CHECK(s7[idx(T::C4)][idx(T::C7)] == 4);
  CHECK(s7[idx(T::C7)][idx(T::C7)] == 16);
  auto s8 = symbolic_power_table(8, 3);
  CHECK(s8[idx(T::C1)][idx(T::C1)] == 1);
  CHECK(s8[idx(T::C1)][idx(T::C6p)] == 1);
  auto s3 = symbolic_power_table(3, 2);
  CHECK(s3[idx(T::C1)][idx(T::C4)] == 1);
  CHECK(s3[idx(T::C4)][idx(T::C4)] == 2);
  auto s2 = symbolic_power_table(2, 2);
  CHECK(s2[idx(T::C2)][idx(T::C3)] == 3);
  CHECK(symbolic_power_tables().size() == 14);  // four for k = 2, four for k = 3, six for k = 4
}

TEST_CASE("chi on power types") {
  const auto s8 = class_spectrum(8);
  CHECK(chi_on_power_types(s8, T::C1, 3) == 56);
  CHECK(chi_on_power_types(s8, T::C3, 2) == s8.at(T::C3).count * -8);
  const auto s7 = class_spectrum(7);
  CHECK(chi_on_power_types(s7, T::C4, 2) == 42 + 6 * (1 - 7));
}

TEST_CASE("representatives") {
  const auto r3 = build_representatives(3);
  CHECK(r3.reps.size() == 14);
  const auto r5 = build_representatives(5);
  int c6p = 0;
  for (const auto& r : r5.reps) c6p += r.type == T::C6p;
  CHECK(c6p == 1);
  for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto r = build_representatives(q);
    const auto s = class_spectrum(q);
    std::map<T, std::set<std::string>> ids;
    for (const auto& c : r.reps) {
      CHECK(in_su3(*r.field, c.matrix, q));
      CHECK(identify_type(*r.field, q, c.matrix) == c.type);
      ids[c.type].insert(c.psu_id);
    }
    for (auto t : kAllTypes) CHECK(static_cast<int64_t>(ids[t].size()) == s.at(t).count);
  }
  CHECK_THROWS_AS(build_representatives(6), Error);
}

TEST_CASE("identify_type on special elements") {
  const auto r = build_representatives(5);
  const auto& F = *r.field;
  CHECK(identify_type(F, 5, identity_matrix<3>()) == T::C1);
  const Field::Elem omega = F.exp((F.size() - 1) / 3);
  CHECK(identify_type(F, 5, scalar_matrix<3>(omega)) == T::C1);
}

TEST_CASE("power distributions from representatives") {
  const auto r7 = build_representatives(7);
  CHECK(power_distribution(r7, 2) == symbolic_power_table(7, 2));
  const auto r4 = build_representatives(4);
  CHECK(power_distribution(r4, 3) == symbolic_power_table(4, 3));
  const auto r5 = build_representatives(5);
  CHECK(power_distribution(r5, 4) == symbolic_power_table(5, 4));
  // Exponent of PSU(3,3) divides |G|.
  const auto r3 = build_representatives(3);
  const auto all = power_distribution(r3, 6048);
  for (auto t : kAllTypes) CHECK(all[idx(T::C1)][idx(t)] == class_spectrum(3).at(t).count);
}

TEST_CASE("power type sequences") {
  const auto r3 = build_representatives(3);
  const auto seq = power_type_sequences(r3, 6);
  for (size_t i = 0; i < r3.reps.size(); ++i) {
    if (r3.reps[i].type == T::C1) CHECK(seq[i] == std::vector<T>(6, T::C1));
    if (r3.reps[i].type == T::C3) CHECK(seq[i][2] == T::C1);
  }
}
