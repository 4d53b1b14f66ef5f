#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: plain scans and exhaustive searches, no factorization, no matrix
// or holomorph structure.

#include <algorithm>
#include <numeric>
#include <vector>

#include "theta/oracle.hpp"

namespace testsupport {

using theta::u64;

inline u64 totient_scan(u64 n) {
  u64 count = 0;
  for (u64 m = 1; m <= n; ++m)
    if (std::gcd(m, n) == 1) ++count;
  return count;
}

inline std::vector<u64> units_scan(u64 n) {
  std::vector<u64> out;
  for (u64 u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) out.push_back(u);
  return out;
}

// |{a in [1, q-1] : gcd(a, q) = gcd(a-1, q) = 1}| by direct scan.
inline u64 double_unit_scan(u64 q) {
  u64 count = 0;
  for (u64 a = 1; a < q; ++a)
    if (std::gcd(a, q) == 1 && std::gcd(a - 1, q) == 1) ++count;
  return count;
}

// Exhaustive isomorphism search over all bijections; fine for size <= 8.
inline bool tables_isomorphic(const theta::CayleyGroup& lhs, const theta::CayleyGroup& rhs) {
  if (lhs.size != rhs.size) return false;
  std::vector<theta::elem_t> map(lhs.size);
  std::iota(map.begin(), map.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < lhs.size && ok; ++x)
      for (std::size_t y = 0; y < lhs.size && ok; ++y)
        ok = map[lhs.op(theta::elem_t(x), theta::elem_t(y))] == rhs.op(map[x], map[y]);
    if (ok) return true;
  } while (std::next_permutation(map.begin(), map.end()));
  return false;
}

// The symmetric group on 3 letters as a composition table of the 6
// permutations in lexicographic order.
inline theta::CayleyGroup s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&perms](const std::array<int, 3>& q) {
    return static_cast<theta::elem_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<theta::elem_t> table(36);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 6; ++i) {
    labels.push_back("s" + std::to_string(i));
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> composed{};
      for (int k = 0; k < 3; ++k) composed[k] = perms[i][perms[j][k]];
      table[6 * i + j] = index_of(composed);
    }
  }
  return theta::from_table(std::move(table), 6, std::move(labels), "S_3");
}

// Composition table of a set of permutations that happens to be closed
// (such as an automorphism group); throws if it is not.
inline theta::CayleyGroup composition_table(const std::vector<theta::AutPermutation>& perms,
                                            std::string name) {
  std::vector<theta::elem_t> table(perms.size() * perms.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    labels.push_back("f" + std::to_string(i));
    for (std::size_t j = 0; j < perms.size(); ++j) {
      theta::AutPermutation composed;
      composed.image.resize(perms[i].image.size());
      for (std::size_t x = 0; x < composed.image.size(); ++x)
        composed.image[x] = perms[i].image[perms[j].image[x]];
      auto it = std::find(perms.begin(), perms.end(), composed);
      if (it == perms.end()) throw theta::invalid_input("composition_table: set not closed");
      table[perms.size() * i + j] = static_cast<theta::elem_t>(it - perms.begin());
    }
  }
  return theta::from_table(std::move(table), perms.size(), std::move(labels), std::move(name));
}

}  // namespace testsupport
