#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "theta/modarith.hpp"
#include "theta/spectrum.hpp"

// Aut(Z_{p^a} (+) Z_{p^b}) for 1 <= a < b, realized as the matrix group
//
//     ( alpha         beta  )   alpha in Z_{p^a}^*,  beta, c in Z_{p^a},
//     ( c * p^(b-a)   delta )   delta in Z_{p^b}^*,
//
// acting on column vectors (x mod p^a, y mod p^b). Every such matrix is an
// automorphism and every automorphism has this form, so enumerating the
// four entry ranges walks Aut G exactly once.

namespace theta {

struct Rank2PGroup {
  u64 p = 2;
  unsigned a = 1, b = 2;
  u64 mod_a = 2, mod_b = 4, order = 8;

  // a = b is rejected: the matrix realization above requires distinct
  // cyclic factors. Use the Cayley-table oracle for square cases.
  static Rank2PGroup make(u64 p, unsigned a, unsigned b) {
    if (!is_prime(p)) throw invalid_input("Rank2PGroup: p must be prime");
    if (a < 1 || a >= b) throw invalid_input("Rank2PGroup: exponents must satisfy 1 <= a < b");
    Rank2PGroup g;
    g.p = p;
    g.a = a;
    g.b = b;
    g.order = pow_u64(p, a + b);
    if (g.order > max_modulus) throw invalid_input("Rank2PGroup: p^(a+b) above the 2^31 cap");
    g.mod_a = pow_u64(p, a);
    g.mod_b = pow_u64(p, b);
    return g;
  }

  std::string name() const {
    return "Z_" + std::to_string(mod_a) + "+Z_" + std::to_string(mod_b);
  }

  friend bool operator==(const Rank2PGroup&, const Rank2PGroup&) = default;
};

struct GElement {
  u64 x = 0, y = 0;
  friend bool operator==(const GElement&, const GElement&) = default;
  friend auto operator<=>(const GElement&, const GElement&) = default;
};

inline void check_element(const Rank2PGroup& g, GElement e) {
  if (e.x >= g.mod_a || e.y >= g.mod_b)
    throw invalid_input("element does not belong to this group");
}

inline GElement add(const Rank2PGroup& g, GElement e1, GElement e2) {
  return {(e1.x + e2.x) % g.mod_a, (e1.y + e2.y) % g.mod_b};
}

inline GElement neg(const Rank2PGroup& g, GElement e) {
  return {(g.mod_a - e.x) % g.mod_a, (g.mod_b - e.y) % g.mod_b};
}

// The lower-left entry is stored through its cofactor c rather than the raw
// residue c*p^(b-a): the four fields then range over exactly the valid
// tuples, with no double counting.
struct AutMatrix {
  Rank2PGroup group;
  u64 alpha = 1, beta = 0, c = 0, delta = 1;

  static AutMatrix make(const Rank2PGroup& g, u64 alpha, u64 beta, u64 c, u64 delta) {
    if (alpha >= g.mod_a || beta >= g.mod_a || c >= g.mod_a || delta >= g.mod_b)
      throw invalid_input("AutMatrix: entry out of range");
    if (std::gcd(alpha, g.p) != 1 || std::gcd(delta, g.p) != 1)
      throw invalid_input("AutMatrix: alpha and delta must be units");
    return AutMatrix{g, alpha, beta, c, delta};
  }

  friend bool operator==(const AutMatrix&, const AutMatrix&) = default;
};

// |Aut G| = phi(p^a) * phi(p^b) * p^(2a) = p^(3a+b-2) (p-1)^2.
inline u64 aut_order(const Rank2PGroup& g) {
  u64 phi_a = g.mod_a - g.mod_a / g.p;
  u64 phi_b = g.mod_b - g.mod_b / g.p;
  return phi_a * phi_b * g.mod_a * g.mod_a;
}

namespace detail {
// r-th unit of Z_{p^k} in ascending order (skip every multiple of p).
inline u64 unit_value(u64 p, u64 r) { return r + 1 + r / (p - 1); }
}  // namespace detail

// Automorphism with lexicographic rank `idx` in the (alpha, beta, c, delta)
// order, alpha slowest; alpha and delta walk their unit groups ascending.
inline AutMatrix aut_at(const Rank2PGroup& g, u64 idx) {
  u64 phi_b = g.mod_b - g.mod_b / g.p;
  u64 i_delta = idx % phi_b;
  idx /= phi_b;
  u64 c = idx % g.mod_a;
  idx /= g.mod_a;
  u64 beta = idx % g.mod_a;
  idx /= g.mod_a;
  if (idx >= g.mod_a - g.mod_a / g.p) throw invalid_input("aut_at: index out of range");
  return AutMatrix{g, detail::unit_value(g.p, idx), beta, c,
                   detail::unit_value(g.p, i_delta)};
}

inline std::vector<AutMatrix> enumerate_aut(const Rank2PGroup& g) {
  u64 n = aut_order(g);
  if (n > (u64{1} << 26))
    throw unsupported("enumerate_aut: automorphism group too large to materialize");
  std::vector<AutMatrix> out;
  out.reserve(n);
  for (u64 i = 0; i < n; ++i) out.push_back(aut_at(g, i));
  return out;
}

inline GElement apply(const AutMatrix& m, GElement e) {
  const Rank2PGroup& g = m.group;
  check_element(g, e);
  u64 x = (m.alpha * e.x + m.beta * (e.y % g.mod_a)) % g.mod_a;
  u64 low = m.c * (g.mod_b / g.mod_a);
  u64 y = (low * e.x + m.delta * e.y) % g.mod_b;
  return {x, y};
}

// Composite recovered from the images of the generators (1,0) and (0,1);
// entry-wise matrix products are ill-defined here because beta lives mod
// p^a but multiplies values mod p^b.
inline AutMatrix compose(const AutMatrix& m1, const AutMatrix& m2) {
  if (!(m1.group == m2.group)) throw invalid_input("compose: group mismatch");
  const Rank2PGroup& g = m1.group;
  GElement im1 = apply(m1, apply(m2, {1, 0}));
  GElement im2 = apply(m1, apply(m2, {0, 1}));
  u64 shift = g.mod_b / g.mod_a;
  if (im1.y % shift != 0)
    throw invalid_input("compose: images do not define a matrix of the expected form");
  return AutMatrix::make(g, im1.x, im2.x, im1.y / shift, im2.y);
}

inline u64 fixed_count(const AutMatrix& m) {
  const Rank2PGroup& g = m.group;
  u64 low = m.c * (g.mod_b / g.mod_a);
  u64 count = 0;
  for (u64 x = 0; x < g.mod_a; ++x)
    for (u64 y = 0; y < g.mod_b; ++y) {
      if ((m.alpha * x + m.beta * (y % g.mod_a)) % g.mod_a != x) continue;
      if ((low * x + m.delta * y) % g.mod_b == y) ++count;
    }
  return count;
}

// All fixed elements, ascending in (x, y).
inline std::vector<GElement> fixed_set(const AutMatrix& m) {
  const Rank2PGroup& g = m.group;
  std::vector<GElement> out;
  for (u64 x = 0; x < g.mod_a; ++x)
    for (u64 y = 0; y < g.mod_b; ++y) {
      GElement e{x, y};
      if (apply(m, e) == e) out.push_back(e);
    }
  return out;
}

// Fixed-point-free iff shifting by -id stays an automorphism, which for
// this matrix form reduces to alpha - 1 and delta - 1 both being units.
inline bool is_fpf_shift(const AutMatrix& m) {
  return std::gcd(m.alpha - 1, m.group.p) == 1 && std::gcd(m.delta - 1, m.group.p) == 1;
}

inline Spectrum theta_spectrum(const Rank2PGroup& g, unsigned threads = 1) {
  if (g.order > max_spectrum_order)
    throw unsupported("theta_spectrum: group order above the 2^20 enumeration cap");
  std::vector<u64> keys;
  for (unsigned k = 0; k <= g.a + g.b; ++k) keys.push_back(pow_u64(g.p, k));
  Spectrum s;
  s.group = g.name();
  s.group_order = g.order;
  s.aut_order = aut_order(g);
  s.entries = tally_fixed_sizes(s.aut_order, threads, keys,
                                [&g](u64 i) { return fixed_count(aut_at(g, i)); });
  return s;
}

struct Subgroup {
  std::string name;
  std::vector<GElement> generators;
  std::vector<GElement> elements;  // sorted
};

// The p+1 subgroups of order p^2 of Z_p (+) Z_{p^2}: J_k = <(k,1)> for
// k in [0, p) and J_p = <(1,0), (0,p)>.
inline std::vector<Subgroup> subgroups_order_p2(const Rank2PGroup& g) {
  if (g.a != 1 || g.b != 2)
    throw unsupported("subgroups_order_p2: only defined for Z_p + Z_{p^2}");
  std::vector<Subgroup> out;
  for (u64 k = 0; k < g.p; ++k) {
    Subgroup s;
    s.name = "J_" + std::to_string(k);
    s.generators = {GElement{k, 1}};
    for (u64 m = 0; m < g.mod_b; ++m) s.elements.push_back({(k * m) % g.mod_a, m});
    std::sort(s.elements.begin(), s.elements.end());
    out.push_back(std::move(s));
  }
  Subgroup jp;
  jp.name = "J_p";
  jp.generators = {GElement{1, 0}, GElement{0, g.p}};
  for (u64 x = 0; x < g.mod_a; ++x)
    for (u64 j = 0; j < g.p; ++j) jp.elements.push_back({x, j * g.p});
  std::sort(jp.elements.begin(), jp.elements.end());
  out.push_back(std::move(jp));
  return out;
}

// Automorphisms fixing at least every element of xs, in enumeration order.
inline std::vector<AutMatrix> at_least_fixers(const Rank2PGroup& g,
                                              const std::vector<GElement>& xs) {
  if (xs.empty()) throw invalid_input("at_least_fixers: element set must be non-empty");
  for (GElement e : xs) check_element(g, e);
  std::vector<AutMatrix> out;
  u64 n = aut_order(g);
  for (u64 i = 0; i < n; ++i) {
    AutMatrix m = aut_at(g, i);
    bool fixes_all = std::all_of(xs.begin(), xs.end(),
                                 [&m](GElement e) { return apply(m, e) == e; });
    if (fixes_all) out.push_back(m);
  }
  return out;
}

// Automorphisms whose fixed set equals h exactly, by direct set equality.
inline std::vector<AutMatrix> exact_fixers(const Rank2PGroup& g, std::vector<GElement> h) {
  if (h.empty()) throw invalid_input("exact_fixers: subgroup must be non-empty");
  for (GElement e : h) check_element(g, e);
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  for (GElement e1 : h)
    for (GElement e2 : h)
      if (!std::binary_search(h.begin(), h.end(), add(g, e1, e2)))
        throw invalid_input("exact_fixers: set is not closed under the group law");
  std::vector<AutMatrix> out;
  u64 n = aut_order(g);
  for (u64 i = 0; i < n; ++i) {
    AutMatrix m = aut_at(g, i);
    if (fixed_set(m) == h) out.push_back(m);
  }
  return out;
}

}  // namespace theta
