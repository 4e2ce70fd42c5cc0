// Copyright 2026 The nmss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Worked example families and brute-force oracles shared by the test
// binaries. The oracles use only integer loops so they do not share code
// paths with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "nmss/set_family.hpp"

namespace nmss::testing {

using Sets = std::vector<std::vector<Residue>>;

inline SetFamily ex13() { return SetFamily(13, {{1, 12}, {4, 9}, {3, 10}}); }
inline SetFamily ex17() { return SetFamily(17, {{1, 16}, {9, 8}, {13, 4}, {15, 2}}); }
inline SetFamily ex151() {
  return SetFamily(151, {{1, 59, 8, 19, 64},
                         {75, 46, 147, 66, 119},
                         {38, 128, 2, 118, 16},
                         {132, 87, 150, 92, 143},
                         {85, 32, 76, 105, 4},
                         {33, 135, 113, 23, 149}});
}
inline SetFamily ex29() {
  return SetFamily(29, {{1, 28}, {4, 25}, {16, 13}, {6, 23}, {24, 5}, {9, 20}, {7, 22}});
}
inline SetFamily ex73() {
  return SetFamily(73, {{1, 8, 64},
                        {52, 51, 43},
                        {3, 24, 46},
                        {10, 7, 56},
                        {9, 72, 65},
                        {30, 21, 22},
                        {27, 70, 49},
                        {17, 63, 66}});
}
inline std::vector<SetFamily> cedf_examples() {
  return {ex13(), ex17(), ex151(), ex29(), ex73()};
}

inline SetFamily sedf29() {
  return SetFamily(29, {{1, 28}, {9, 20}, {23, 6}, {4, 25}, {7, 22}, {5, 24}, {13, 16}});
}
inline SetFamily sedf37() {
  return SetFamily(37, {{1, 26, 10}, {8, 23, 6}, {27, 36, 11}, {31, 29, 14}});
}
inline SetFamily sedf113() {
  return SetFamily(113, {{1, 98, 112, 15},
                         {81, 28, 32, 85},
                         {7, 8, 106, 105},
                         {2, 83, 111, 30},
                         {49, 56, 64, 57},
                         {14, 16, 99, 97},
                         {4, 53, 109, 60}});
}
inline std::vector<SetFamily> sedf_examples() { return {sedf29(), sedf37(), sedf113()}; }

/// Sorted list of x - y mod n.
inline std::vector<std::uint32_t> naive_differences(const std::vector<Residue>& a1,
                                                    const std::vector<Residue>& a2,
                                                    std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (auto x : a1) {
    for (auto y : a2) out.push_back((x + n - y) % n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Occurrence counts of each group element in the union over c in shifts of
/// D(A_{j+c}, A_j).
inline std::vector<std::uint64_t> naive_shift_counts(const Sets& sets, std::uint32_t n,
                                                     const std::vector<std::uint32_t>& shifts) {
  std::vector<std::uint64_t> counts(n, 0);
  const auto m = static_cast<std::uint32_t>(sets.size());
  for (auto c : shifts) {
    for (std::uint32_t j = 0; j < m; ++j) {
      for (auto d : naive_differences(sets[(j + c) % m], sets[j], n)) ++counts[d];
    }
  }
  return counts;
}

/// True iff every nonzero element occurs equally often and zero never does.
inline bool naive_uniform(const std::vector<std::uint64_t>& counts) {
  if (counts[0] != 0) return false;
  return std::all_of(counts.begin() + 1, counts.end(),
                     [&](std::uint64_t v) { return v == counts[1]; });
}

inline bool naive_cedf(const SetFamily& f, std::uint32_t c) {
  return naive_uniform(naive_shift_counts(f.sets(), f.n(), {c}));
}

inline std::uint64_t brute_order(std::uint64_t a, std::uint64_t p) {
  std::uint64_t x = a % p;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * a % p;
    ++k;
  }
  return k;
}

inline std::vector<bool> square_table(std::uint32_t p) {
  std::vector<bool> sq(p, false);
  for (std::uint64_t x = 1; x < p; ++x) sq[x * x % p] = true;
  return sq;
}

inline bool brute_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct Fraction {
  std::uint64_t num;
  std::uint64_t den;
};

/// Game value by direct counting. target(i) lists the sets whose hit counts
/// as a win from source i. `strong` maximizes per source instead of
/// averaging over sources.
template <typename Target>
Fraction brute_advantage(const SetFamily& f, bool strong, Target target) {
  const std::uint32_t n = f.n();
  const std::uint32_t m = f.m();
  const std::uint64_t l = f.set_size();
  std::vector<int> owner(n, -1);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (auto a : f.sets()[i]) owner[a] = static_cast<int>(i);
  }
  std::uint64_t best = 0;
  for (std::uint32_t delta = 1; delta < n; ++delta) {
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      std::uint64_t hits = 0;
      for (auto a : f.sets()[i]) {
        int o = owner[(a + delta) % n];
        if (o >= 0 && target(i, static_cast<std::uint32_t>(o))) ++hits;
      }
      if (strong) {
        best = std::max(best, hits);
      } else {
        total += hits;
      }
    }
    if (!strong) best = std::max(best, total);
  }
  std::uint64_t den = strong ? l : l * m;
  std::uint64_t g = std::gcd(best, den);
  return {best / g, den / g};
}

/// Random family of m disjoint l-subsets of Z_n; needs n >= m l.
inline SetFamily random_family(std::mt19937_64& gen, std::uint32_t n, std::uint32_t m,
                               std::uint32_t l) {
  std::vector<Residue> pool(n);
  std::iota(pool.begin(), pool.end(), 0U);
  std::shuffle(pool.begin(), pool.end(), gen);
  Sets sets(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    sets[i].assign(pool.begin() + i * l, pool.begin() + (i + 1) * l);
  }
  return SetFamily(n, std::move(sets));
}

/// Replaces one random element of `f` by a random residue unused by f.
inline SetFamily perturb(std::mt19937_64& gen, const SetFamily& f) {
  Sets sets = f.sets();
  std::vector<Residue> unused;
  for (Residue g = 0; g < f.n(); ++g) {
    if (!f.owner(g)) unused.push_back(g);
  }
  std::uniform_int_distribution<std::size_t> pick_set(0, sets.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_elem(0, f.set_size() - 1);
  std::uniform_int_distribution<std::size_t> pick_new(0, unused.size() - 1);
  sets[pick_set(gen)][pick_elem(gen)] = unused[pick_new(gen)];
  return SetFamily(f.n(), std::move(sets));
}

}  // namespace nmss::testing
