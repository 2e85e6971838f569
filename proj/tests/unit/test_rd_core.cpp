#include "doctest.h"
#include "rdbound/error.hpp"
#include "rdbound/rd_core.hpp"

using namespace rdbound;

TEST_CASE("ladder values") {
  const auto& l = RdLadder::builtin();
  CHECK(l.version() == 1);
  CHECK(l.rd_upper(5) == 1);
  CHECK(l.rd_upper(32) == 26);
  CHECK(l.rd_upper(24) == 18);
  CHECK(l.rd_upper(110) == 103);
  CHECK(l.rd_upper(6) == 2);
  CHECK(l.rd_upper(6, true) == 1);
  CHECK(l.rd_upper(7, true) == 3);
  CHECK(l.rd_upper(4) == 1);
  CHECK(l.rd_upper(64) == 58);
  CHECK(l.rd_upper(20958401) == 20958401 - 13);
  CHECK_THROWS_AS(l.rd_upper(0), Error);
}

TEST_CASE("ladder is monotone and below n - 1") {
  const auto& l = RdLadder::builtin();
  int64_t prev = 0;
  for (int64_t n = 1; n <= 400000; ++n) {
    const int64_t v = l.rd_upper(n);
    CHECK_MESSAGE(v >= prev, n);
    if (n >= 2) CHECK(v <= n - 1);
    prev = v;
    if (n > 2000) n += 97;
  }
}

TEST_CASE("ladder parsing") {
  const auto l = RdLadder::parse("version: 1\n# comment\n1 = 1\n2 = 1\nfrom 3: n - 1\ncompat 4 = 2\nknown psu2 5 = 1\n");
  CHECK(l.rd_upper(10) == 9);
  CHECK(l.rd_upper(4, true) == 2);
  CHECK(l.known_bound(Family::PSU2, 5) == 1);
  CHECK_FALSE(l.known_bound(Family::PSU3, 5).has_value());
  try {
    RdLadder::parse("version: 1\n1 = 1\nbogus line\n");
    FAIL("expected LadderFormat");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LadderFormat);
  }
  CHECK_THROWS_AS(RdLadder::parse("1 = 1\n"), Error);
  CHECK_THROWS_AS(RdLadder::parse("version: 1\n5 = 7\n"), Error);
  CHECK_THROWS_AS(RdLadder::parse("version: 1\n5 = 3\n6 = 2\n"), Error);
}

TEST_CASE("minimal permutation degrees") {
  CHECK(mu(Family::PSU3, 5) == 50);
  CHECK(mu(Family::PSU3, 7) == 344);
  CHECK(mu(Family::PSU2, 9) == 6);
  CHECK(mu(Family::PSU2, 13) == 14);
  CHECK(mu(Family::PSU2, 13, true) == 12);
  CHECK(mu(Family::PSU2, 16, true) == 14);
  CHECK(mu(Family::PSU2, 8) == 9);
  CHECK_THROWS_AS(mu(Family::PSU2, 3), Error);
  CHECK_THROWS_AS(mu(Family::PSU3, 2), Error);
  CHECK(table_mu(Family::PSU3, 2) == 9);
  CHECK_THROWS_AS(mu(Family::PSU3, 6), Error);
}

TEST_CASE("bound by mu") {
  const auto& l = RdLadder::builtin();
  CHECK(bound_by_mu(Family::PSU2, 23, l) == 18);
  CHECK(bound_by_mu(Family::PSU3, 8, l) == 505);
  CHECK(bound_by_mu(Family::PSU2, 5, l) == 1);
  CHECK(bound_by_mu(Family::PSU2, 9, l) == 2);
  CHECK(bound_by_mu(Family::PSU2, 9, l, true) == 1);
  CHECK(is_compat_flagged(Family::PSU2, 13));
  CHECK_FALSE(is_compat_flagged(Family::PSU2, 17));
}
