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

#include "nmss/amd_codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace nmss {
namespace {

// Target predicate: does landing in set j count as a win from source i?
struct WinRule {
  std::optional<std::uint32_t> shift;  // nullopt: any j != i
  bool operator()(std::uint32_t i, std::uint32_t j, std::uint32_t m) const {
    return shift ? j == (i + *shift) % m : j != i;
  }
};

// Number of codewords x in A_source with x + delta landing in a winning set.
std::uint64_t hits(const SetFamily& f, std::uint32_t source, Residue delta, WinRule rule) {
  std::uint64_t count = 0;
  const std::uint32_t n = f.n();
  for (Residue x : f.set(source)) {
    Residue y = x + delta >= n ? x + delta - n : x + delta;
    if (auto j = f.owner(y); j && rule(source, *j, f.m())) ++count;
  }
  return count;
}

AdvantageReport weak_game(const AmdCode& code, WinRule rule, GameKind kind) {
  const SetFamily& f = code.family();
  std::uint64_t best = 0;
  std::vector<Residue> arg;
  for (Residue delta = 1; delta < f.n(); ++delta) {
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < f.m(); ++i) total += hits(f, i, delta, rule);
    if (total > best) {
      best = total;
      arg.clear();
    }
    if (total == best) arg.push_back(delta);
  }
  return AdvantageReport{kind, rule.shift.value_or(0),
                         Rational(best, std::uint64_t{f.m()} * f.set_size()), std::move(arg)};
}

AdvantageReport strong_game(const AmdCode& code, WinRule rule, GameKind kind) {
  const SetFamily& f = code.family();
  std::uint64_t best = 0;
  std::vector<Residue> arg;
  for (Residue delta = 1; delta < f.n(); ++delta) {
    std::uint64_t top = 0;
    for (std::uint32_t i = 0; i < f.m(); ++i) top = std::max(top, hits(f, i, delta, rule));
    if (top > best) {
      best = top;
      arg.clear();
    }
    if (top == best) arg.push_back(delta);
  }
  return AdvantageReport{kind, rule.shift.value_or(0), Rational(best, f.set_size()),
                         std::move(arg)};
}

void check_shift(const AmdCode& code, std::uint32_t c) {
  if (c < 1 || c >= code.sources()) {
    throw std::invalid_argument("circular shift must lie in [1, m-1]");
  }
}

}  // namespace

std::string to_string(GameKind kind) {
  switch (kind) {
    case GameKind::kWeak: return "weak";
    case GameKind::kStrong: return "strong";
    case GameKind::kCircularWeak: return "circular-weak";
    case GameKind::kCircularStrong: return "circular-strong";
    case GameKind::kMalleability: return "malleability";
  }
  return "unknown";
}

Residue AmdCode::encode(std::uint32_t source, RandomSource& rng) const {
  if (source >= sources()) throw std::out_of_range("source index out of range");
  auto set = family_.set(source);
  return set[rng.below(set.size())];
}

AdvantageReport weak_advantage(const AmdCode& code) {
  return weak_game(code, WinRule{}, GameKind::kWeak);
}

AdvantageReport strong_advantage(const AmdCode& code) {
  return strong_game(code, WinRule{}, GameKind::kStrong);
}

AdvantageReport circular_weak_advantage(const AmdCode& code, std::uint32_t c) {
  check_shift(code, c);
  return weak_game(code, WinRule{c}, GameKind::kCircularWeak);
}

AdvantageReport circular_strong_advantage(const AmdCode& code, std::uint32_t c) {
  check_shift(code, c);
  return strong_game(code, WinRule{c}, GameKind::kCircularStrong);
}

bool is_r_optimal_weak(const AmdCode& code) {
  const SetFamily& f = code.family();
  return weak_advantage(code).epsilon ==
         Rational(std::uint64_t{f.set_size()} * (f.m() - 1), f.n() - 1);
}

bool is_r_optimal_circular(const AmdCode& code, std::uint32_t c) {
  const SetFamily& f = code.family();
  return circular_weak_advantage(code, c).epsilon == Rational(f.set_size(), f.n() - 1);
}

}  // namespace nmss
