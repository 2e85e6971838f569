#include "doctest.h"
#include "rdbound/oracle.hpp"

using namespace rdbound;

namespace {

void check_class_equation(const ClassPartition& p) {
  uint64_t total = 0;
  for (const auto& c : p.classes) {
    total += c.size;
    CHECK(c.size * c.centralizer_order == p.group_order);
  }
  CHECK(total == p.group_order);
}

}  // namespace

TEST_CASE("SL(2,q) enumeration") {
  const auto g = enumerate_group(GroupKind::SL2, 5);
  CHECK(g.order() == 120);
  CHECK(g.order() == group_order_formula(GroupKind::SL2, 5));
  const auto p = conjugacy_classes(g);
  CHECK(p.classes.size() == 9);
  check_class_equation(p);
  for (uint64_t k : g.keys) CHECK(in_sl2(*g.field, g.decode2(k)));
  const auto g4 = enumerate_group(GroupKind::SL2, 4);
  CHECK(quotient_by_center(g4).order() == g4.order());
}

TEST_CASE("SU(3,q) enumeration and quotients") {
  const auto g2 = enumerate_group(GroupKind::SU3, 2);
  CHECK(g2.order() == 216);
  for (uint64_t k : g2.keys) CHECK(in_su3(*g2.field, g2.decode3(k), 2));
  const auto p2 = quotient_by_center(g2);
  CHECK(p2.order() == 72);

  const auto g3 = enumerate_group(GroupKind::SU3, 3);
  CHECK(g3.order() == 6048);
  const auto p3 = quotient_by_center(g3);
  CHECK(p3.order() == 6048);
  const auto cl = conjugacy_classes(p3);
  CHECK(cl.classes.size() == 14);
  check_class_equation(cl);
}

TEST_CASE("trivial group") {
  const auto t = trivial_group();
  CHECK(t.order() == 1);
  CHECK(conjugacy_classes(t).classes.size() == 1);
}

TEST_CASE("power maps of the oracle") {
  const auto g = quotient_by_center(enumerate_group(GroupKind::SU3, 3));
  const auto p = conjugacy_classes(g);
  const int32_t id = class_of_key(g, p, g.identity());
  for (uint64_t k = 2; k <= 6; ++k) CHECK(power_map_oracle(g, p, k)[id] == id);
  for (uint64_t k = 2; k <= 4; ++k) CHECK(power_map_is_class_function(g, p, k, 3, 11));
  const auto D = power_distribution_oracle(g, p, 2);
  for (size_t src = 0; src < p.classes.size(); ++src) {
    uint64_t col = 0;
    for (size_t dst = 0; dst < p.classes.size(); ++dst) col += D[dst][src];
    CHECK(col == 1);
  }
  for (const auto& c : p.classes) CHECK(centralizer_order_direct(g, c.rep) == c.centralizer_order);
}

TEST_CASE("size limit is enforced") {
  OracleOptions o;
  o.max_order = 1000;
  CHECK_THROWS(enumerate_group(GroupKind::SU3, 3, o));
}
