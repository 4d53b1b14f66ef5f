#pragma once

#include <numeric>
#include <vector>

#include "theta/common.hpp"

// Exact modular integer arithmetic and the counting functions the group
// modules are built on. Everything here is a pure function on immutable
// values.

namespace theta {

inline u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

// Deterministic trial division; inputs are small by the modulus cap.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Euler's totient via trial-division factorization.
inline u64 totient(u64 n) {
  if (n == 0) throw invalid_input("totient: n must be >= 1");
  u64 result = n;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    result -= result / d;
    while (n % d == 0) n /= d;
  }
  if (n > 1) result -= result / n;
  return result;
}

struct UnitGroup {
  u64 modulus = 2;
  std::vector<u64> members;  // ascending, each coprime to modulus
};

inline UnitGroup units(u64 n) {
  if (n < 2) throw invalid_input("units: modulus must be >= 2");
  if (n > max_modulus) throw invalid_input("units: modulus above 2^31 cap");
  UnitGroup g{n, {}};
  for (u64 u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) g.members.push_back(u);
  return g;
}

// Canonical residue: value always reduced into [0, modulus).
struct Residue {
  u64 value = 0;
  u64 modulus = 2;

  Residue() = default;
  Residue(u64 v, u64 m) : modulus(m) {
    if (m < 2) throw invalid_input("Residue: modulus must be >= 2");
    if (m > max_modulus) throw invalid_input("Residue: modulus above 2^31 cap");
    value = v % m;
  }

  friend bool operator==(const Residue&, const Residue&) = default;
};

namespace detail {
inline u64 common_modulus(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus) throw invalid_input("residue arithmetic: mixed moduli");
  return a.modulus;
}
}  // namespace detail

inline Residue operator+(const Residue& a, const Residue& b) {
  u64 m = detail::common_modulus(a, b);
  return Residue((a.value + b.value) % m, m);
}

inline Residue operator-(const Residue& a, const Residue& b) {
  u64 m = detail::common_modulus(a, b);
  return Residue((a.value + m - b.value) % m, m);
}

inline Residue operator*(const Residue& a, const Residue& b) {
  u64 m = detail::common_modulus(a, b);
  return Residue((a.value * b.value) % m, m);
}

// Multiplicative inverse by the extended Euclidean algorithm.
inline Residue inv_mod(const Residue& u) {
  std::int64_t r0 = static_cast<std::int64_t>(u.modulus);
  std::int64_t r1 = static_cast<std::int64_t>(u.value);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw not_invertible("inv_mod: value is not coprime to the modulus");
  if (t0 < 0) t0 += static_cast<std::int64_t>(u.modulus);
  return Residue(static_cast<u64>(t0), u.modulus);
}

// |{x in [1, p^alpha - 1] : gcd(x, p^alpha) = gcd(x - 1, p^alpha) = 1}|.
// The units that stay units after subtracting one: p^alpha - 2 p^(alpha-1).
inline u64 count_double_units(u64 p, unsigned alpha) {
  if (!is_prime(p)) throw invalid_input("count_double_units: p must be prime");
  if (alpha < 1) throw invalid_input("count_double_units: alpha must be >= 1");
  return pow_u64(p, alpha) - 2 * pow_u64(p, alpha - 1);
}

}  // namespace theta
