#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace theta {

using u64 = std::uint64_t;

// Argument outside an operation's domain.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Request is well-formed but outside what this toolkit covers
// (parameter range, missing closed form, infeasible enumeration).
struct unsupported : std::domain_error {
  using std::domain_error::domain_error;
};

struct not_invertible : std::domain_error {
  using std::domain_error::domain_error;
};

// Moduli are kept below 2^31 so any product of two reduced values fits in
// 64 bits and every intermediate can be reduced eagerly.
inline constexpr u64 max_modulus = u64{1} << 31;

// Spectrum computation scans all of G once per automorphism; groups above
// this order are rejected rather than silently truncated.
inline constexpr u64 max_spectrum_order = u64{1} << 20;

inline u64 mul_checked(u64 a, u64 b) {
  if (a != 0 && b > ~u64{0} / a) throw invalid_input("integer overflow in exact product");
  return a * b;
}

inline u64 pow_u64(u64 base, unsigned exp) {
  u64 r = 1;
  while (exp--) r = mul_checked(r, base);
  return r;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> low, high;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace theta
