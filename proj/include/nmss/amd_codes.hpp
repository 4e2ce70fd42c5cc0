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
#include <string>
#include <vector>

#include "nmss/random.hpp"
#include "nmss/rational.hpp"
#include "nmss/set_family.hpp"

namespace nmss {

enum class GameKind { kWeak, kStrong, kCircularWeak, kCircularStrong, kMalleability };

/// "weak", "strong", "circular-weak", "circular-strong", "malleability".
std::string to_string(GameKind kind);

/// Exact best-adversary success probability for one game.
struct AdvantageReport {
  GameKind game = GameKind::kWeak;
  /// Circular shift c; zero for the non-circular games.
  std::uint32_t shift = 0;
  Rational epsilon;
  /// Every offset achieving epsilon, ascending.
  std::vector<Residue> best_deltas;
};

/// An AMD code: source i is encoded as a uniform element of A_i.
class AmdCode {
 public:
  explicit AmdCode(SetFamily family) : family_(std::move(family)) {}

  const SetFamily& family() const noexcept { return family_; }
  std::uint32_t sources() const noexcept { return family_.m(); }

  /// Uniform element of A_source. Throws std::out_of_range for a bad index.
  Residue encode(std::uint32_t source, RandomSource& rng) const;

  /// Source whose set contains g; nullopt means tampering was detected.
  std::optional<std::uint32_t> decode(Residue g) const noexcept { return family_.owner(g); }

 private:
  SetFamily family_;
};

// All advantages below are computed by exhausting every offset Delta != 0,
// every source i and every codeword x in A_i. Weak games average over the
// source (denominator m*l); strong games let the adversary pick the source.

AdvantageReport weak_advantage(const AmdCode& code);
AdvantageReport strong_advantage(const AmdCode& code);
AdvantageReport circular_weak_advantage(const AmdCode& code, std::uint32_t c);
AdvantageReport circular_strong_advantage(const AmdCode& code, std::uint32_t c);

/// epsilon == l(m-1)/(n-1) exactly.
bool is_r_optimal_weak(const AmdCode& code);
/// circular weak epsilon == l/(n-1) exactly.
bool is_r_optimal_circular(const AmdCode& code, std::uint32_t c);

}  // namespace nmss
