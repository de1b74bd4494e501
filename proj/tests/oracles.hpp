// Independent reference computations used by the tests. Nothing here calls
// into the set algebra under test except to read membership.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "degset/eps.hpp"

namespace oracle {

using degset::EPS;
using degset::Int;

/// Membership vector over [0, n]; index 0 is always false.
using Bits = std::vector<bool>;

inline Bits to_bits(const EPS& s, Int n) {
  Bits b(static_cast<std::size_t>(n + 1), false);
  for (Int i = 1; i <= n; ++i) b[i] = s.contains(i);
  return b;
}

inline Bits bits_of(Int n, const std::function<bool(Int)>& pred) {
  Bits b(static_cast<std::size_t>(n + 1), false);
  for (Int i = 1; i <= n; ++i) b[i] = pred(i);
  return b;
}

inline Bits bit_union(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] || b[i];
  return r;
}

inline Bits bit_intersect(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && b[i];
  return r;
}

inline Bits bit_scale(Int d, const Bits& a, Int n) {
  Bits r(static_cast<std::size_t>(n + 1), false);
  for (Int i = 1; i * d <= n && i < static_cast<Int>(a.size()); ++i)
    if (a[i]) r[i * d] = true;
  return r;
}

/// Sumset evaluated on [1, n] from operands known on [1, n].
inline Bits bit_sumset(const Bits& a, const Bits& b, Int n) {
  Bits r(static_cast<std::size_t>(n + 1), false);
  for (Int s = 1; s <= n; ++s) {
    if (!a[s]) continue;
    for (Int t = 1; s + t <= n; ++t)
      if (b[t]) r[s + t] = true;
  }
  return r;
}

/// {sum a_i g_i : a_i >= lo} on [1, n], by exhaustive enumeration of
/// coefficient vectors.
inline Bits brute_combinations(const std::vector<Int>& gens, Int lo, Int n) {
  Bits r(static_cast<std::size_t>(n + 1), false);
  std::function<void(std::size_t, Int, bool)> rec = [&](std::size_t i, Int acc, bool any) {
    if (acc > n) return;
    if (i == gens.size()) {
      if (acc >= 1 && (any || lo > 0)) r[acc] = true;
      return;
    }
    for (Int a = lo; acc + a * gens[i] <= n; ++a) rec(i + 1, acc + a * gens[i], any || a > 0);
  };
  rec(0, 0, false);
  return r;
}

inline std::vector<Int> members(const Bits& b) {
  std::vector<Int> out;
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i]) out.push_back(static_cast<Int>(i));
  return out;
}

/// Random canonical set with small threshold and period.
inline EPS random_eps(std::mt19937_64& rng, Int max_threshold = 40, Int max_period = 12) {
  std::uniform_int_distribution<Int> tdist(1, max_threshold), pdist(1, max_period);
  std::bernoulli_distribution coin(0.4);
  degset::RawEps raw;
  raw.threshold = tdist(rng);
  raw.period = pdist(rng);
  for (Int i = 1; i < raw.threshold; ++i)
    if (coin(rng)) raw.explicit_members.push_back(i);
  for (Int r = 0; r < raw.period; ++r)
    if (coin(rng)) raw.residues.push_back(r);
  return degset::canonicalize(raw);
}

}  // namespace oracle
