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

#include "nmss/diff_families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nmss {
namespace {

void check_shift(const SetFamily& family, std::uint32_t c) {
  if (c < 1 || c >= family.m()) {
    throw std::invalid_argument("shift " + std::to_string(c) + " outside [1, " +
                                std::to_string(family.m() - 1) + "]");
  }
}

// Sets inside a SetFamily are already validated, so skip the checks that
// external_difference performs on raw input.
void accumulate(DifferenceMultiset& into, std::span<const Residue> a1,
                std::span<const Residue> a2) {
  const std::uint32_t n = into.n();
  for (Residue x : a1) {
    for (Residue y : a2) into.insert(x >= y ? x - y : x + n - y);
  }
}

// Uniformity test on Z_n \ {0}. Scans from element 0 upward and reports the
// first element whose multiplicity is off.
VerificationReport check_uniform(const DifferenceMultiset& d) {
  const std::uint32_t n = d.n();
  const std::uint64_t lambda = d.total() / (n - 1);
  VerificationReport report;
  if (d.count(0) != 0) {
    report.violation = Violation{0, d.count(0), 0, std::nullopt};
    return report;
  }
  for (Residue g = 1; g < n; ++g) {
    if (d.count(g) != lambda) {
      report.violation = Violation{g, d.count(g), lambda, std::nullopt};
      return report;
    }
  }
  report.valid = lambda > 0;
  report.lambda = lambda;
  return report;
}

}  // namespace

std::uint64_t DifferenceMultiset::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

DifferenceMultiset& DifferenceMultiset::operator+=(const DifferenceMultiset& other) {
  if (other.n() != n()) throw std::invalid_argument("multisets over different groups");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

DifferenceMultiset external_difference(std::span<const Residue> a1, std::span<const Residue> a2,
                                       std::uint32_t n) {
  if (a1.empty() || a2.empty()) throw std::invalid_argument("difference of an empty set");
  for (auto set : {a1, a2}) {
    for (Residue g : set) {
      if (g >= n) throw std::invalid_argument("element outside Z_" + std::to_string(n));
    }
  }
  for (Residue x : a1) {
    if (std::find(a2.begin(), a2.end(), x) != a2.end()) {
      throw std::invalid_argument("sets overlap at " + std::to_string(x));
    }
  }
  DifferenceMultiset d(n);
  accumulate(d, a1, a2);
  return d;
}

VerificationReport verify_cedf(const SetFamily& family, std::uint32_t c) {
  const std::uint32_t shifts[] = {c};
  return verify_sedf(family, shifts);
}

VerificationReport verify_sedf(const SetFamily& family, std::span<const std::uint32_t> shifts) {
  if (shifts.empty()) throw std::invalid_argument("shift set must be nonempty");
  std::vector<std::uint32_t> seen(shifts.begin(), shifts.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("shift set has repeated entries");
  }
  const std::uint32_t m = family.m();
  DifferenceMultiset sum(family.n());
  for (std::uint32_t c : shifts) {
    check_shift(family, c);
    for (std::uint32_t j = 0; j < m; ++j) accumulate(sum, family.set((j + c) % m), family.set(j));
  }
  return check_uniform(sum);
}

VerificationReport verify_scedf(const SetFamily& family, std::uint32_t c) {
  check_shift(family, c);
  const std::uint32_t m = family.m();
  VerificationReport result;
  for (std::uint32_t j = 0; j < m; ++j) {
    DifferenceMultiset d(family.n());
    accumulate(d, family.set((j + c) % m), family.set(j));
    VerificationReport r = check_uniform(d);
    if (!r.valid) {
      if (r.violation) r.violation->pair_index = j;
      return r;
    }
    // Every pair has the same total, so lambda agrees automatically.
    result = r;
  }
  return result;
}

SetFamily shift_family(const SetFamily& family, std::uint32_t c) {
  const std::uint32_t m = family.m();
  check_shift(family, c);
  if (std::gcd(c, m) != 1) {
    throw std::invalid_argument("shift " + std::to_string(c) + " is not coprime to m=" +
                                std::to_string(m));
  }
  if (!verify_cedf(family, 1).valid) {
    throw std::invalid_argument("input family is not a 1-circular difference family");
  }
  std::uint32_t c_inv = 1;
  while ((static_cast<std::uint64_t>(c) * c_inv) % m != 1 % m) ++c_inv;
  std::vector<std::vector<Residue>> sets;
  sets.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    sets.push_back(family.sets()[(static_cast<std::uint64_t>(i) * c_inv) % m]);
  }
  return SetFamily(family.n(), std::move(sets));
}

}  // namespace nmss
