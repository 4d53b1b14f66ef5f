#pragma once

#include <map>
#include <string>
#include <thread>
#include <vector>

#include "theta/common.hpp"

namespace theta {

// Divisor-indexed multiset of automorphism fixed-point counts. Keys are
// exactly the divisors of the group order, zero counts included, and the
// counts sum to |Aut G|.
struct Spectrum {
  std::string group;
  u64 group_order = 0;
  u64 aut_order = 0;
  std::map<u64, u64> entries;

  u64 at(u64 d) const {
    auto it = entries.find(d);
    if (it == entries.end()) throw invalid_input("Spectrum: d is not a divisor of the group order");
    return it->second;
  }

  u64 total() const {
    u64 sum = 0;
    for (const auto& [d, count] : entries) sum += count;
    return sum;
  }
};

// Tallies fixed-set sizes over automorphism indices [0, total), optionally
// split across worker threads. Merging is additive, so the result is
// independent of the partition; a crashed key (size not in `keys`) would
// violate Lagrange and surfaces as std::out_of_range.
template <class FixedSizeFn>
std::map<u64, u64> tally_fixed_sizes(u64 total, unsigned threads,
                                     const std::vector<u64>& keys,
                                     FixedSizeFn fixed_size) {
  std::map<u64, u64> counts;
  for (u64 k : keys) counts[k] = 0;
  if (threads <= 1 || total < 2) {
    for (u64 i = 0; i < total; ++i) counts.at(fixed_size(i)) += 1;
    return counts;
  }
  unsigned workers = static_cast<unsigned>(std::min<u64>(threads, total));
  std::vector<std::map<u64, u64>> partials(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  u64 chunk = total / workers, rem = total % workers, begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    u64 end = begin + chunk + (w < rem ? 1 : 0);
    pool.emplace_back([&fixed_size, &partials, w, begin, end] {
      auto& local = partials[w];
      for (u64 i = begin; i < end; ++i) local[fixed_size(i)] += 1;
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (const auto& local : partials)
    for (const auto& [d, c] : local) counts.at(d) += c;
  return counts;
}

}  // namespace theta
