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
#include <span>
#include <vector>

#include "nmss/prime_field.hpp"
#include "nmss/random.hpp"

namespace nmss {

/// (k, n) threshold over Z_p. Requires 2 <= k <= n and p >= n + 1.
class ThresholdParams {
 public:
  ThresholdParams(std::uint32_t k, std::uint32_t n, PrimeField field);

  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t n() const noexcept { return n_; }
  const PrimeField& field() const noexcept { return field_; }

 private:
  std::uint32_t k_;
  std::uint32_t n_;
  PrimeField field_;
};

struct Share {
  FieldElement x;  // public identifier, nonzero
  FieldElement y;  // secret ordinate
};

struct ShareVector {
  ThresholdParams params;
  std::vector<Share> shares;
};

/// Coefficients constant term first. Length k; the leading coefficient may
/// be zero.
struct Polynomial {
  std::vector<FieldElement> coefficients;

  FieldElement evaluate(FieldElement x) const;
};

struct Dealing {
  ShareVector shares;
  Polynomial polynomial;
};

/// Draws a_1..a_{k-1} uniformly (in that order) from `rng`, sets a_0 to the
/// secret, and hands participant i the share (i, f(i)) for i = 1..n.
Dealing deal(const ThresholdParams& params, FieldElement secret, RandomSource& rng);

/// b_j = prod_{h != j} x_h / (x_h - x_j). Throws std::invalid_argument on
/// an empty list, a zero x or a repeated x.
std::vector<FieldElement> lagrange_coefficients(std::span<const FieldElement> xs);

/// Sum of b_j y_j over the first k shares. Throws std::invalid_argument on
/// fewer than k shares, repeated or zero identifiers, or foreign fields.
FieldElement reconstruct(const ThresholdParams& params, std::span<const Share> shares);

}  // namespace nmss
