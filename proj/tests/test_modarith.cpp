#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "theta/modarith.hpp"

using namespace theta;

TEST_CASE("gcd basics") {
  CHECK(gcd(12, 8) == 4);
  CHECK(gcd(1, 977) == 1);
  CHECK(gcd(25, 24) == 1);
  CHECK(gcd(0, 7) == 7);
}

TEST_CASE("totient agrees with a coprimality scan") {
  CHECK(totient(1) == 1);
  CHECK(totient(9) == 6);
  CHECK(totient(9) == testsupport::totient_scan(9));
  for (u64 p : {u64{2}, u64{3}, u64{5}, u64{7}, u64{11}})
    CHECK(totient(p * p) == p * p - p);
  // units() is itself a direct coprimality scan, independent of the
  // factorization route totient() takes
  for (u64 n = 2; n <= 10000; ++n) {
    INFO("n = " << n);
    REQUIRE(units(n).members.size() == totient(n));
  }
  CHECK_THROWS_AS(totient(0), invalid_input);
}

TEST_CASE("totient is multiplicative on coprime factors") {
  for (u64 m = 2; m <= 200; m += 3)
    for (u64 n = 2; n <= 200; n += 7) {
      if (std::gcd(m, n) != 1) continue;
      CHECK(totient(m * n) == totient(m) * totient(n));
    }
}

TEST_CASE("units lists every residue coprime to the modulus") {
  CHECK(units(4).members == std::vector<u64>{1, 3});
  CHECK(units(5).members == std::vector<u64>{1, 2, 3, 4});
  CHECK(units(9).members == std::vector<u64>{1, 2, 4, 5, 7, 8});
  for (u64 n = 2; n <= 2000; ++n) {
    UnitGroup g = units(n);
    REQUIRE(g.members.size() == totient(n));
    REQUIRE(g.members == testsupport::units_scan(n));
  }
  CHECK_THROWS_AS(units(1), invalid_input);
  CHECK_THROWS_AS(units(0), invalid_input);
}

TEST_CASE("residues stay canonical") {
  Residue r(14, 5);
  CHECK(r.value == 4);
  CHECK((Residue(3, 7) + Residue(5, 7)).value == 1);
  CHECK((Residue(2, 7) - Residue(5, 7)).value == 4);
  CHECK((Residue(3, 7) * Residue(5, 7)).value == 1);
  CHECK_THROWS_AS(Residue(0, 1), invalid_input);
  CHECK_THROWS_AS(Residue(3, 7) + Residue(3, 8), invalid_input);
}

TEST_CASE("inv_mod inverts every unit") {
  CHECK(inv_mod(Residue(1, 17)).value == 1);
  CHECK(inv_mod(Residue(4, 5)).value == 4);
  CHECK(inv_mod(Residue(2, 9)).value == 5);
  for (u64 n = 2; n <= 500; ++n)
    for (u64 u : units(n).members) {
      Residue v = inv_mod(Residue(u, n));
      REQUIRE((Residue(u, n) * v).value == 1);
    }
  CHECK_THROWS_AS(inv_mod(Residue(0, 9)), not_invertible);
  CHECK_THROWS_AS(inv_mod(Residue(3, 9)), not_invertible);
}

TEST_CASE("count_double_units matches the scan") {
  CHECK(count_double_units(2, 1) == 0);
  CHECK(count_double_units(3, 2) == 3);
  const struct { u64 p; unsigned alpha; } cases[] = {
      {2, 1}, {2, 2}, {2, 3}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}, {13, 2}};
  for (const auto& c : cases) {
    u64 q = pow_u64(c.p, c.alpha);
    INFO("p = " << c.p << ", alpha = " << c.alpha);
    REQUIRE(count_double_units(c.p, c.alpha) == testsupport::double_unit_scan(q));
    REQUIRE(count_double_units(c.p, c.alpha) == q - 2 * pow_u64(c.p, c.alpha - 1));
  }
  CHECK_THROWS_AS(count_double_units(6, 2), invalid_input);
  CHECK_THROWS_AS(count_double_units(3, 0), invalid_input);
}

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
