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

#include "nmss/set_family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nmss {

SetFamily::SetFamily(std::uint32_t n, std::vector<std::vector<Residue>> sets)
    : n_(n), sets_(std::move(sets)) {
  if (n_ < 2) throw std::invalid_argument("group order must be at least 2");
  if (sets_.size() < 2) throw std::invalid_argument("a family needs at least two sets");
  const std::size_t size = sets_.front().size();
  if (size == 0) throw std::invalid_argument("sets must be nonempty");
  owner_.assign(n_, -1);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].size() != size) {
      throw std::invalid_argument("set " + std::to_string(i) + " has size " +
                                  std::to_string(sets_[i].size()) + ", expected " +
                                  std::to_string(size));
    }
    for (Residue g : sets_[i]) {
      if (g >= n_) {
        throw std::invalid_argument("element " + std::to_string(g) + " outside Z_" +
                                    std::to_string(n_));
      }
      if (owner_[g] >= 0) {
        throw std::invalid_argument("element " + std::to_string(g) + " appears in set " +
                                    std::to_string(owner_[g]) + " and set " +
                                    std::to_string(i));
      }
      owner_[g] = static_cast<std::int32_t>(i);
    }
  }
}

bool SetFamily::same_sets_as(const SetFamily& other) const {
  if (n_ != other.n_ || sets_.size() != other.sets_.size()) return false;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto a = sets_[i];
    auto b = other.sets_[i];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

}  // namespace nmss
