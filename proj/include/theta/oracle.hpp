#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "theta/abelian.hpp"
#include "theta/dihedral.hpp"
#include "theta/spectrum.hpp"

// Ground truth independent of any matrix or holomorph description: groups
// are plain Cayley tables and automorphisms are found by generator-image
// search. Slow and obviously correct, for cross-checking the structured
// enumerations.

namespace theta {

using elem_t = std::uint16_t;

inline constexpr u64 max_cayley_size = 512;

struct CayleyGroup {
  std::size_t size = 1;
  std::vector<elem_t> table;  // row-major: table[size * x + y] = x * y
  elem_t identity = 0;
  std::vector<std::string> labels;
  std::vector<elem_t> inverses;
  std::vector<u64> element_orders;
  std::string name;

  elem_t op(elem_t x, elem_t y) const { return table[size * x + y]; }
};

// Validates and finishes a raw table: two-sided identity, Latin square,
// associativity (exhaustive up to size 64, 10^4 fixed-seed triples above,
// where the constructors are algebraic and a failure means a bug here).
inline CayleyGroup from_table(std::vector<elem_t> table, std::size_t size,
                              std::vector<std::string> labels, std::string name) {
  if (size < 1 || size > max_cayley_size)
    throw unsupported("from_table: group size must be in [1, 512]");
  if (table.size() != size * size) throw invalid_input("from_table: table shape mismatch");
  if (labels.size() != size) throw invalid_input("from_table: one label per element required");
  for (elem_t v : table)
    if (v >= size) throw invalid_input("from_table: table entry out of range");

  CayleyGroup g;
  g.size = size;
  g.table = std::move(table);
  g.labels = std::move(labels);
  g.name = std::move(name);

  bool found_identity = false;
  for (std::size_t e = 0; e < size && !found_identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < size && ok; ++x)
      ok = g.op(e, x) == x && g.op(x, e) == x;
    if (ok) {
      g.identity = static_cast<elem_t>(e);
      found_identity = true;
    }
  }
  if (!found_identity) throw invalid_input("from_table: no two-sided identity");

  std::vector<char> seen(size);
  for (std::size_t x = 0; x < size; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < size; ++y) seen[g.op(x, y)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw invalid_input("from_table: row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < size; ++y) seen[g.op(y, x)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw invalid_input("from_table: column is not a permutation");
  }

  auto associative = [&g](elem_t x, elem_t y, elem_t z) {
    return g.op(g.op(x, y), z) == g.op(x, g.op(y, z));
  };
  if (size <= 64) {
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y)
        for (std::size_t z = 0; z < size; ++z)
          if (!associative(elem_t(x), elem_t(y), elem_t(z)))
            throw invalid_input("from_table: operation is not associative");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, size - 1);
    for (int t = 0; t < 10000; ++t)
      if (!associative(elem_t(pick(rng)), elem_t(pick(rng)), elem_t(pick(rng))))
        throw invalid_input("from_table: operation is not associative");
  }

  g.inverses.resize(size);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      if (g.op(elem_t(x), elem_t(y)) == g.identity) {
        g.inverses[x] = static_cast<elem_t>(y);
        break;
      }

  g.element_orders.resize(size);
  for (std::size_t x = 0; x < size; ++x) {
    u64 order = 1;
    elem_t power = static_cast<elem_t>(x);
    while (power != g.identity) {
      power = g.op(power, static_cast<elem_t>(x));
      ++order;
    }
    g.element_orders[x] = order;
  }
  return g;
}

// Direct sum of cyclic groups; element index is the mixed-radix encoding of
// the coordinate tuple with the last coordinate fastest, so for moduli
// [m1, m2] the tuple (x, y) sits at index x*m2 + y.
inline CayleyGroup build_direct_sum(const std::vector<u64>& moduli) {
  if (moduli.empty()) throw invalid_input("build_direct_sum: need at least one modulus");
  u64 size = 1;
  for (u64 m : moduli) {
    if (m < 2) throw invalid_input("build_direct_sum: moduli must be >= 2");
    size *= m;
    if (size > max_cayley_size) throw unsupported("build_direct_sum: order above the 512 cap");
  }
  auto decode = [&moduli](u64 idx) {
    std::vector<u64> coords(moduli.size());
    for (std::size_t k = moduli.size(); k-- > 0;) {
      coords[k] = idx % moduli[k];
      idx /= moduli[k];
    }
    return coords;
  };
  auto encode = [&moduli](const std::vector<u64>& coords) {
    u64 idx = 0;
    for (std::size_t k = 0; k < moduli.size(); ++k) idx = idx * moduli[k] + coords[k];
    return idx;
  };

  std::vector<elem_t> table(size * size);
  std::vector<std::string> labels(size);
  std::string name;
  for (u64 m : moduli) name += (name.empty() ? "Z_" : "+Z_") + std::to_string(m);
  for (u64 i = 0; i < size; ++i) {
    std::vector<u64> ci = decode(i);
    std::string label = "(";
    for (std::size_t k = 0; k < ci.size(); ++k)
      label += (k ? "," : "") + std::to_string(ci[k]);
    labels[i] = label + ")";
    for (u64 j = 0; j < size; ++j) {
      std::vector<u64> cj = decode(j);
      for (std::size_t k = 0; k < cj.size(); ++k) cj[k] = (ci[k] + cj[k]) % moduli[k];
      table[size * i + j] = static_cast<elem_t>(encode(cj));
    }
  }
  return from_table(std::move(table), size, std::move(labels), std::move(name));
}

// D_{2n} as a table; rotations a^i at indices [0, n), reflections a^i b at
// indices [n, 2n).
inline CayleyGroup build_dihedral(u64 n) {
  if (n < 3 || n > 128) throw unsupported("build_dihedral: n must be in [3, 128]");
  DihedralGroup d = DihedralGroup::make(n);
  std::size_t size = static_cast<std::size_t>(2 * n);
  auto at = [n](u64 idx) { return DihedralElement{idx % n, idx >= n}; };
  auto index_of = [n](DihedralElement e) { return e.i + (e.reflected ? n : 0); };
  std::vector<elem_t> table(size * size);
  std::vector<std::string> labels(size);
  for (u64 i = 0; i < size; ++i) {
    labels[i] = element_name(at(i));
    for (u64 j = 0; j < size; ++j)
      table[size * i + j] = static_cast<elem_t>(index_of(dmul(d, at(i), at(j))));
  }
  return from_table(std::move(table), size, std::move(labels), d.name());
}

struct AutPermutation {
  std::vector<elem_t> image;
  friend bool operator==(const AutPermutation&, const AutPermutation&) = default;
  friend auto operator<=>(const AutPermutation&, const AutPermutation&) = default;
};

// Closure of the seed elements under the operation and inverses.
inline std::vector<elem_t> subgroup_generated(const CayleyGroup& g,
                                              const std::vector<elem_t>& seeds) {
  if (seeds.empty()) throw invalid_input("subgroup_generated: seed set must be non-empty");
  std::vector<elem_t> steps;
  for (elem_t s : seeds) {
    if (s >= g.size) throw invalid_input("subgroup_generated: seed out of range");
    steps.push_back(s);
    steps.push_back(g.inverses[s]);
  }
  std::vector<char> in(g.size, 0);
  std::vector<elem_t> members{g.identity};
  in[g.identity] = 1;
  for (std::size_t next = 0; next < members.size(); ++next)
    for (elem_t s : steps) {
      elem_t v = g.op(members[next], s);
      if (!in[v]) {
        in[v] = 1;
        members.push_back(v);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

namespace detail {

// Greedy generating set: repeatedly add the element whose closure gain is
// largest (smallest index on ties). In-scope groups need at most 3.
inline std::vector<elem_t> greedy_generators(const CayleyGroup& g) {
  std::vector<elem_t> gens;
  std::vector<elem_t> closure{g.identity};
  while (closure.size() < g.size) {
    if (gens.size() == 3)
      throw unsupported("brute_force_automorphisms: no generating set of size <= 3 found");
    std::size_t best_size = 0;
    elem_t best = 0;
    for (std::size_t x = 0; x < g.size; ++x) {
      if (std::binary_search(closure.begin(), closure.end(), static_cast<elem_t>(x))) continue;
      std::vector<elem_t> trial = gens;
      trial.push_back(static_cast<elem_t>(x));
      std::size_t sz = subgroup_generated(g, trial).size();
      if (sz > best_size) {
        best_size = sz;
        best = static_cast<elem_t>(x);
      }
    }
    gens.push_back(best);
    closure = subgroup_generated(g, gens);
  }
  return gens;
}

// Breadth-first expressions of every element as a word in the generators:
// visit[k] was first reached from parent[k] by right-multiplying gen[k].
struct WordTree {
  std::vector<elem_t> visit_order;  // excludes the identity
  std::vector<elem_t> parent;
  std::vector<int> gen;
};

inline WordTree word_tree(const CayleyGroup& g, const std::vector<elem_t>& gens) {
  WordTree t;
  t.parent.assign(g.size, 0);
  t.gen.assign(g.size, -1);
  std::vector<char> visited(g.size, 0);
  visited[g.identity] = 1;
  std::vector<elem_t> queue{g.identity};
  for (std::size_t next = 0; next < queue.size(); ++next) {
    elem_t u = queue[next];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      elem_t v = g.op(u, gens[j]);
      if (visited[v]) continue;
      visited[v] = 1;
      t.parent[v] = u;
      t.gen[v] = static_cast<int>(j);
      queue.push_back(v);
      t.visit_order.push_back(v);
    }
  }
  return t;
}

}  // namespace detail

// All automorphisms by generator-image search: candidate images are pruned
// by element order, extended through the word tree, then accepted iff the
// extension is a bijection preserving the whole table. Output sorted by
// image vector.
inline std::vector<AutPermutation> brute_force_automorphisms(const CayleyGroup& g) {
  std::vector<elem_t> gens = detail::greedy_generators(g);
  if (gens.empty()) {
    return {AutPermutation{{g.identity}}};
  }
  detail::WordTree words = detail::word_tree(g, gens);

  std::vector<std::vector<elem_t>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t x = 0; x < g.size; ++x)
      if (g.element_orders[x] == g.element_orders[gens[j]])
        candidates[j].push_back(static_cast<elem_t>(x));

  std::vector<AutPermutation> found;
  std::vector<elem_t> images(gens.size());
  std::vector<elem_t> map(g.size);
  std::vector<char> hit(g.size);

  auto test_tuple = [&]() {
    map[g.identity] = g.identity;
    for (elem_t v : words.visit_order)
      map[v] = g.op(map[words.parent[v]], images[words.gen[v]]);
    std::fill(hit.begin(), hit.end(), 0);
    for (elem_t v : map) {
      if (hit[v]) return;  // not injective
      hit[v] = 1;
    }
    for (std::size_t x = 0; x < g.size; ++x)
      for (std::size_t y = 0; y < g.size; ++y)
        if (map[g.op(elem_t(x), elem_t(y))] != g.op(map[x], map[y])) return;
    found.push_back(AutPermutation{map});
  };

  // Depth-first over candidate tuples, lexicographic.
  std::vector<std::size_t> cursor(gens.size(), 0);
  std::size_t level = 0;
  while (true) {
    if (cursor[level] == candidates[level].size()) {
      if (level == 0) break;
      cursor[level] = 0;
      ++cursor[--level];
      continue;
    }
    images[level] = candidates[level][cursor[level]];
    if (level + 1 < gens.size()) {
      ++level;
    } else {
      test_tuple();
      ++cursor[level];
    }
  }

  std::sort(found.begin(), found.end());
  return found;
}

inline Spectrum oracle_theta_spectrum(const CayleyGroup& g) {
  std::vector<AutPermutation> auts = brute_force_automorphisms(g);
  Spectrum s;
  s.group = g.name;
  s.group_order = g.size;
  s.aut_order = auts.size();
  for (u64 d : divisors(g.size)) s.entries[d] = 0;
  for (const AutPermutation& a : auts) {
    u64 fixed = 0;
    for (std::size_t x = 0; x < a.image.size(); ++x)
      if (a.image[x] == x) ++fixed;
    s.entries.at(fixed) += 1;
  }
  return s;
}

// The permutation a matrix automorphism induces on the direct-sum table of
// [p^a, p^b] (same indexing as build_direct_sum).
inline AutPermutation to_permutation(const AutMatrix& m) {
  const Rank2PGroup& g = m.group;
  if (g.order > max_cayley_size)
    throw unsupported("to_permutation: group above the 512 table cap");
  AutPermutation p;
  p.image.resize(g.order);
  for (u64 x = 0; x < g.mod_a; ++x)
    for (u64 y = 0; y < g.mod_b; ++y) {
      GElement e = apply(m, {x, y});
      p.image[x * g.mod_b + y] = static_cast<elem_t>(e.x * g.mod_b + e.y);
    }
  return p;
}

// The permutation f_{alpha,beta} induces on the dihedral table (same
// indexing as build_dihedral).
inline AutPermutation to_permutation(const HolAut& f) {
  if (2 * f.n > max_cayley_size)
    throw unsupported("to_permutation: group above the 512 table cap");
  AutPermutation p;
  p.image.resize(2 * f.n);
  for (u64 i = 0; i < f.n; ++i) {
    p.image[i] = static_cast<elem_t>(dihedral_apply(f, {i, false}).i);
    p.image[f.n + i] = static_cast<elem_t>(f.n + dihedral_apply(f, {i, true}).i);
  }
  return p;
}

}  // namespace theta
