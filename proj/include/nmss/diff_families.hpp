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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nmss/set_family.hpp"

namespace nmss {

/// Multiset over Z_n, stored densely as one multiplicity per residue.
class DifferenceMultiset {
 public:
  explicit DifferenceMultiset(std::uint32_t n) : counts_(n, 0) {}

  std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }
  std::uint64_t count(Residue g) const { return counts_.at(g); }
  std::uint64_t total() const noexcept;
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

  void insert(Residue g, std::uint64_t times = 1) { counts_.at(g) += times; }
  DifferenceMultiset& operator+=(const DifferenceMultiset& other);

  bool operator==(const DifferenceMultiset&) const = default;

 private:
  std::vector<std::uint64_t> counts_;
};

/// D(A1, A2) = { x - y : x in A1, y in A2 } as a multiset over Z_n.
/// Throws std::invalid_argument if the sets are empty, intersect, or hold
/// elements outside [0, n).
DifferenceMultiset external_difference(std::span<const Residue> a1, std::span<const Residue> a2,
                                       std::uint32_t n);

struct Violation {
  Residue element;
  std::uint64_t observed;
  std::uint64_t expected;
  /// For the per-pair strong check: the index j of the failing pair.
  std::optional<std::uint32_t> pair_index;
};

struct VerificationReport {
  bool valid = false;
  /// Common multiplicity on nonzero elements; meaningful only when valid.
  std::uint64_t lambda = 0;
  /// First mismatch in scan order (element 0 upward).
  std::optional<Violation> violation;
};

/// Checks that the union over j of D(A_{j+c mod m}, A_j) is lambda times
/// every nonzero element. c must lie in [1, m-1].
VerificationReport verify_cedf(const SetFamily& family, std::uint32_t c);

/// Same check with the union taken over every shift in `shifts`. Shifts must
/// be distinct and lie in [1, m-1]; the set must be nonempty.
VerificationReport verify_sedf(const SetFamily& family, std::span<const std::uint32_t> shifts);

/// Per-pair version: each D(A_{j+c mod m}, A_j) on its own must be lambda
/// times every nonzero element, with one lambda shared by all j.
VerificationReport verify_scedf(const SetFamily& family, std::uint32_t c);

/// Reindexes a 1-circular family into a c-circular one with
/// A'_i = A_{i * c^{-1} mod m}. Requires gcd(c, m) = 1, 1 <= c < m, and a
/// family that verifies with shift 1.
SetFamily shift_family(const SetFamily& family, std::uint32_t c);

}  // namespace nmss
