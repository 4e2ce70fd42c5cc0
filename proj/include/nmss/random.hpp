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
#include <random>
#include <vector>

namespace nmss {

/// Source of uniform integers. Every randomized routine takes one of these
/// explicitly; nothing in the library reads ambient entropy.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  /// Uniform integer in [0, bound). bound must be positive.
  virtual std::uint64_t below(std::uint64_t bound) = 0;
};

/// mt19937_64 with platform-independent bounded sampling (rejection on the
/// raw 64-bit output rather than std::uniform_int_distribution).
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed);

  std::uint64_t below(std::uint64_t bound) override;

 private:
  std::mt19937_64 engine_;
};

/// Seed for trial `index` of an experiment seeded with `seed` (splitmix64
/// mixing), so any single trial can be replayed on its own.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Replays a fixed script of draws; each draw must be below the requested
/// bound. Throws std::out_of_range when the script runs out. Used to force
/// particular polynomials or encodings in tests and worked examples.
class ScriptedRandom final : public RandomSource {
 public:
  explicit ScriptedRandom(std::vector<std::uint64_t> script) : script_(std::move(script)) {}

  std::uint64_t below(std::uint64_t bound) override;
  std::size_t consumed() const noexcept { return pos_; }

 private:
  std::vector<std::uint64_t> script_;
  std::size_t pos_ = 0;
};

}  // namespace nmss
