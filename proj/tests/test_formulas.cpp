#include <catch2/catch_amalgamated.hpp>

#include "theta/formulas.hpp"

using namespace theta;

TEST_CASE("theta_zp_zp2 values") {
  CHECK(theta_zp_zp2(2, 1) == 0);
  CHECK(theta_zp_zp2(2, 2) == 2);
  CHECK(theta_zp_zp2(2, 4) == 5);
  CHECK(theta_zp_zp2(2, 8) == 1);
  CHECK(theta_zp_zp2(3, 3) == 57);
  for (u64 p : {u64{2}, u64{3}, u64{5}, u64{7}, u64{13}})
    CHECK(theta_zp_zp2(p, p * p * p) == 1);
  CHECK_THROWS_AS(theta_zp_zp2(3, 2), invalid_input);
  CHECK_THROWS_AS(theta_zp_zp2(6, 1), invalid_input);
}

TEST_CASE("the four closed-form counts exhaust Aut") {
  for (u64 p = 2; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    u64 mass = theta_zp_zp2(p, 1) + theta_zp_zp2(p, p) + theta_zp_zp2(p, p * p) +
               theta_zp_zp2(p, p * p * p);
    REQUIRE(mass == aut_order_general(p, 1, 2));
  }
}

TEST_CASE("fpf_count_general") {
  CHECK(fpf_count_general(3, 1, 2) == 27);
  CHECK(fpf_count_general(3, 1, 3) == 81);
  for (unsigned a = 1; a <= 4; ++a)
    for (unsigned b = a + 1; b <= 6; ++b) CHECK(fpf_count_general(2, a, b) == 0);
  for (u64 p = 2; p <= 97; ++p)
    if (is_prime(p)) CHECK(fpf_count_general(p, 1, 2) == theta_zp_zp2(p, 1));
  CHECK_THROWS_AS(fpf_count_general(3, 2, 2), unsupported);
  CHECK_THROWS_AS(fpf_count_general(9, 1, 2), invalid_input);
}

TEST_CASE("aut_order_general") {
  CHECK(aut_order_general(2, 1, 2) == 8);
  CHECK(aut_order_general(5, 1, 2) == 2000);
  CHECK(aut_order_general(2, 2, 3) == 128);
  CHECK(aut_order_general(5, 1, 2) == enumerate_aut(Rank2PGroup::make(5, 1, 2)).size());
  CHECK(aut_order_general(2, 2, 3) == enumerate_aut(Rank2PGroup::make(2, 2, 3)).size());
  CHECK_THROWS_AS(aut_order_general(3, 3, 2), unsupported);
}

TEST_CASE("per-subgroup at-least counts") {
  CHECK(prop1_atleast_counts(2).j0 == 2);
  CHECK(prop1_atleast_counts(2).jk_each == 2);
  CHECK(prop1_atleast_counts(2).jp == 4);
  CHECK(prop1_atleast_counts(3).j0 == 6);
  CHECK(prop1_atleast_counts(3).jp == 9);

  for (u64 p : {u64{2}, u64{3}, u64{5}, u64{7}}) {
    Prop1Counts counts = prop1_atleast_counts(p);
    // exact fixers per subgroup are the at-least counts minus the identity
    u64 sum = counts.j0 - 1 + (p - 1) * (counts.jk_each - 1) + counts.jp - 1;
    REQUIRE(sum == p * p * p - p - 1);
  }

  // matches the enumerated at-least counts
  for (u64 p : {u64{2}, u64{3}, u64{5}}) {
    Rank2PGroup g = Rank2PGroup::make(p, 1, 2);
    Prop1Counts counts = prop1_atleast_counts(p);
    std::vector<Subgroup> subs = subgroups_order_p2(g);
    for (const Subgroup& s : subs) {
      u64 expected = s.name == "J_p" ? counts.jp : (s.name == "J_0" ? counts.j0 : counts.jk_each);
      REQUIRE(at_least_fixers(g, s.elements).size() == expected);
    }
  }
  CHECK_THROWS_AS(prop1_atleast_counts(10), invalid_input);
}

TEST_CASE("verify_spectrum reports per-divisor agreement") {
  for (u64 p : {u64{2}, u64{3}, u64{5}}) {
    SpectrumVerification v = verify_spectrum(p);
    INFO("p = " << p);
    REQUIRE(v.all_pass);
    REQUIRE(v.divisors.size() == 4);
    for (const DivisorCheck& dc : v.divisors) {
      REQUIRE(dc.pass);
      REQUIRE(dc.expected == dc.actual);
    }
  }
  SpectrumVerification v5 = verify_spectrum(5);
  CHECK(v5.divisors[0].expected == 1125);
  CHECK(v5.divisors[1].expected == 755);
  CHECK(v5.divisors[2].expected == 119);
  CHECK(v5.divisors[3].expected == 1);
}
