#include "doctest.h"
#include "rdbound/engine.hpp"
#include "rdbound/error.hpp"
#include "rdbound/numtheory.hpp"

using namespace rdbound;

TEST_CASE("free algebra dimensions") {
  CHECK(free_algebra_dim({4}, 8) == 1);
  CHECK(free_algebra_dim({4, 4}, 8) == 3);
  CHECK(free_algebra_dim({2, 4}, 6) == 2);
  CHECK(free_algebra_dim({}, 0) == 1);
  CHECK(free_algebra_dim({}, 5) == 0);
}

TEST_CASE("available counts") {
  CHECK(available_count({{4, 1}, {8, 2}}, {4}, 8) == 1);
  CHECK(available_count({{4, 3}}, {}, 4) == 3);
  CHECK(available_count({{4, 3}}, {4, 4}, 4) == 1);
  CHECK(available_count({{4, 1}}, {4}, 4) == 0);
}

TEST_CASE("degree selection examples") {
  const auto& l = RdLadder::builtin();
  auto c13 = select_degrees({{4, 1}, {8, 2}}, 6, 14, l, 10);
  CHECK(c13.degrees == std::vector<int>{4});
  CHECK(c13.bound == 4);
  REQUIRE(c13.extensions.size() == 1);
  CHECK(c13.extensions[0].degree == 8);
  CHECK(c13.extensions[0].product == 32);
  CHECK(c13.extensions[0].irreducibility_fails);
  CHECK(c13.extensions[0].ladder_fails);
  CHECK(c13.extensions[0].rd_product == 26);

  auto c8 = select_degrees({{4, 3}}, 56, 513, l, 6);
  CHECK(c8.degrees == std::vector<int>{4, 4});
  CHECK(c8.bound == 53);
  CHECK(c8.blockers == kLadderCondition);

  auto c19 = select_degrees({{3, 1}, {4, 1}}, 9, 20, l, 8);
  CHECK(c19.degrees == std::vector<int>{3});
  CHECK(c19.bound == 7);
  CHECK(c19.blockers == kLadderCondition);

  auto none = select_degrees({}, 5, 100, l, 6);
  CHECK(none.r() == 0);
  CHECK(none.bound == 4);
  CHECK(none.blockers == kNoInvariants);
}

TEST_CASE("tie break prefers the smaller product") {
  const auto& l = RdLadder::builtin();
  // (2) and (3) both give r = 1; the product 2 wins.
  auto c = select_degrees({{2, 1}, {3, 1}}, 3, 7, l, 4);
  CHECK(c.degrees == std::vector<int>{2});
}

TEST_CASE("certificates verify and match the exhaustive search") {
  const auto& l = RdLadder::builtin();
  for (uint32_t q : {7u, 13u, 19u, 27u, 31u, 107u, 125u}) {
    const auto c = certify(Family::PSU2, q);
    CHECK(verify_certificate(c, l).empty());
    CHECK(exhaustive_best(c.counts, c.dim, c.mu, l, c.max_degree) == c.degrees);
  }
  for (uint32_t q : {3u, 5u, 8u, 13u, 17u}) {
    const auto c = certify(Family::PSU3, q);
    CHECK(verify_certificate(c, l).empty());
    CHECK(exhaustive_best(c.counts, c.dim, c.mu, l, c.max_degree) == c.degrees);
  }
  auto bad = certify(Family::PSU3, 8);
  bad.degrees.push_back(4);
  bad.product *= 4;
  bad.bound -= 1;
  CHECK_FALSE(verify_certificate(bad, l).empty());
}

TEST_CASE("asymptotic bound") {
  CHECK(asymptotic_bound(23).r == 4);
  CHECK(asymptotic_bound(23).bound == 501);
  CHECK(asymptotic_bound(37).r == 5);
  CHECK(asymptotic_bound(37).bound == 1326);
  CHECK(asymptotic_bound(67).r == 6);
  CHECK(asymptotic_bound(67).bound == 4415);
  for (uint32_t q : prime_powers_up_to(23, 197)) {
    const auto a = asymptotic_bound(q);
    CHECK(a.r >= 4);
    CHECK(static_cast<double>(a.bound) <= a.formula);
  }
  CHECK_THROWS_AS(asymptotic_bound(19), Error);
}

TEST_CASE("table rows") {
  const auto r17 = make_row(Family::PSU3, 17);
  REQUIRE(r17.ok);
  CHECK(r17.cert.dim == 272);
  CHECK(r17.cert.bound == 267);
  CHECK(r17.cert.degree_string() == "4,4,4,4");
  CHECK(r17.cert.mu == 4914);
  CHECK(r17.cert.bound_mu == 4905);
  const auto r107 = make_row(Family::PSU2, 107);
  REQUIRE(r107.ok);
  CHECK(r107.cert.dim == 53);
  CHECK(r107.cert.bound == 49);
  CHECK(r107.cert.degree_string() == "3,4,4");
  CHECK(r107.cert.bound_mu == 102);
  const auto r3 = make_row(Family::PSU3, 3);
  CHECK(r3.cert.degree_string() == "6");
  CHECK(r3.cert.bound_mu == 22);
  const auto bad = make_row(Family::PSU2, 6);
  CHECK_FALSE(bad.ok);
  CHECK(bad.error.find("NotPrimePower") != std::string::npos);
}
