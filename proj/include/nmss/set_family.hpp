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

namespace nmss {

/// Element of the cyclic group Z_n, stored as its least nonnegative residue.
using Residue = std::uint32_t;

/// Ordered tuple (A_0, ..., A_{m-1}) of pairwise disjoint, equal-size
/// subsets of Z_n. The same object serves as an AMD code and as a candidate
/// difference family. Element order inside each set is preserved as given.
class SetFamily {
 public:
  /// Throws std::invalid_argument when n < 2, m < 2, sets are empty or of
  /// unequal size, an element is outside [0, n), or two sets intersect.
  SetFamily(std::uint32_t n, std::vector<std::vector<Residue>> sets);

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t m() const noexcept { return static_cast<std::uint32_t>(sets_.size()); }
  std::uint32_t set_size() const noexcept {
    return static_cast<std::uint32_t>(sets_.front().size());
  }

  const std::vector<std::vector<Residue>>& sets() const noexcept { return sets_; }
  std::span<const Residue> set(std::uint32_t i) const { return sets_.at(i); }

  /// Index of the set containing g, if any.
  std::optional<std::uint32_t> owner(Residue g) const noexcept {
    if (g >= n_ || owner_[g] < 0) return std::nullopt;
    return static_cast<std::uint32_t>(owner_[g]);
  }

  /// Same sets, same order, ignoring element order within each set.
  bool same_sets_as(const SetFamily& other) const;

  bool operator==(const SetFamily& o) const { return n_ == o.n_ && sets_ == o.sets_; }

 private:
  std::uint32_t n_;
  std::vector<std::vector<Residue>> sets_;
  std::vector<std::int32_t> owner_;
};

}  // namespace nmss
