#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "theta/modarith.hpp"
#include "theta/spectrum.hpp"

// The dihedral group D_{2n} = <a, b : a^n = b^2 = (ba)^2 = 1> and its
// automorphism group realized as the holomorph of Z_n: every automorphism
// is an f_{alpha,beta} with alpha a unit mod n, acting by
//   a^i     |->  a^(alpha i)
//   a^i b   |->  a^(alpha i + beta) b.

namespace theta {

struct DihedralGroup {
  u64 n = 3;
  u64 order = 6;

  // n <= 2 is rejected: the holomorph description of Aut fails there.
  static DihedralGroup make(u64 n) {
    if (n < 3) throw unsupported("DihedralGroup: n must be >= 3");
    if (n > max_modulus / 2) throw invalid_input("DihedralGroup: 2n above the 2^31 cap");
    return {n, 2 * n};
  }

  std::string name() const { return "D_" + std::to_string(order); }

  friend bool operator==(const DihedralGroup&, const DihedralGroup&) = default;
};

// a^i for reflected = false, a^i b for reflected = true.
struct DihedralElement {
  u64 i = 0;
  bool reflected = false;
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

// Product from the presentation relations: b a^j = a^(-j) b.
inline DihedralElement dmul(const DihedralGroup& g, DihedralElement u, DihedralElement v) {
  if (u.i >= g.n || v.i >= g.n) throw invalid_input("dmul: element does not belong to D_{2n}");
  u64 j = u.reflected ? (g.n - v.i) % g.n : v.i;
  return {(u.i + j) % g.n, u.reflected != v.reflected};
}

inline std::string element_name(DihedralElement e) {
  std::string rot;
  if (e.i == 1) rot = "a";
  else if (e.i > 1) rot = "a^" + std::to_string(e.i);
  if (e.reflected) return rot + "b";
  return rot.empty() ? "1" : rot;
}

struct HolAut {
  u64 n = 3;
  u64 alpha = 1, beta = 0;

  static HolAut make(u64 n, u64 alpha, u64 beta) {
    if (n < 3) throw unsupported("HolAut: n must be >= 3");
    if (alpha >= n || beta >= n) throw invalid_input("HolAut: parameters out of range");
    if (std::gcd(alpha, n) != 1) throw invalid_input("HolAut: alpha must be a unit mod n");
    return {n, alpha, beta};
  }

  friend bool operator==(const HolAut&, const HolAut&) = default;
};

// All n*phi(n) automorphisms, lexicographic in (alpha, beta).
inline std::vector<HolAut> enumerate_dihedral_aut(const DihedralGroup& g) {
  u64 count = totient(g.n) * g.n;
  if (count > (u64{1} << 26))
    throw unsupported("enumerate_dihedral_aut: automorphism group too large to materialize");
  std::vector<HolAut> out;
  out.reserve(count);
  for (u64 alpha = 1; alpha < g.n; ++alpha) {
    if (std::gcd(alpha, g.n) != 1) continue;
    for (u64 beta = 0; beta < g.n; ++beta) out.push_back({g.n, alpha, beta});
  }
  return out;
}

inline DihedralElement dihedral_apply(const HolAut& f, DihedralElement e) {
  if (e.i >= f.n) throw invalid_input("dihedral_apply: element does not belong to D_{2n}");
  u64 img = (f.alpha * e.i + (e.reflected ? f.beta : 0)) % f.n;
  return {img, e.reflected};
}

// Exact fixed set by scanning all 2n elements; rotations first.
inline std::vector<DihedralElement> dihedral_fixed_set(const HolAut& f) {
  std::vector<DihedralElement> out;
  for (int reflected = 0; reflected < 2; ++reflected)
    for (u64 i = 0; i < f.n; ++i) {
      DihedralElement e{i, reflected != 0};
      if (dihedral_apply(f, e) == e) out.push_back(e);
    }
  return out;
}

inline u64 dihedral_fixed_count(const HolAut& f) {
  u64 count = 0;
  for (u64 i = 0; i < f.n; ++i)
    if (f.alpha * i % f.n == i) ++count;
  for (u64 i = 0; i < f.n; ++i)
    if ((f.alpha * i + f.beta) % f.n == i) ++count;
  return count;
}

// For prime n and alpha != 1 the unique fixed reflection a^i b has
// i = (1 - alpha)^(-1) beta mod n.
inline u64 fixed_reflection_index(const HolAut& f) {
  if (!is_prime(f.n)) throw unsupported("fixed_reflection_index: n must be prime");
  if (f.alpha == 1) throw unsupported("fixed_reflection_index: alpha must differ from 1");
  Residue one_minus_alpha((f.n + 1 - f.alpha) % f.n, f.n);
  return (inv_mod(one_minus_alpha).value * f.beta) % f.n;
}

inline Spectrum dihedral_theta_spectrum(const DihedralGroup& g, unsigned threads = 1) {
  if (g.order > max_spectrum_order)
    throw unsupported("dihedral_theta_spectrum: order above the 2^20 enumeration cap");
  // Index space: alpha runs over the units of Z_n ascending, beta fastest.
  UnitGroup un = units(g.n);
  u64 total = un.members.size() * g.n;
  Spectrum s;
  s.group = g.name();
  s.group_order = g.order;
  s.aut_order = total;
  s.entries = tally_fixed_sizes(total, threads, divisors(g.order), [&](u64 idx) {
    HolAut f{g.n, un.members[idx / g.n], idx % g.n};
    return dihedral_fixed_count(f);
  });
  return s;
}

// theta(D_{2p}, d) for odd prime p: 0, p(p-2), p-1, 1 at d = 1, 2, p, 2p.
// Gated to odd primes; the pattern genuinely fails for composite n.
inline u64 theta_dihedral_formula(u64 p, u64 d) {
  if (p == 2 || !is_prime(p))
    throw unsupported("theta_dihedral_formula: p must be an odd prime");
  if (d == 0 || (2 * p) % d != 0)
    throw invalid_input("theta_dihedral_formula: d must divide 2p");
  if (d == 1) return 0;
  if (d == 2) return p * (p - 2);
  if (d == p) return p - 1;
  return 1;  // d == 2p
}

}  // namespace theta
