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

#include "nmss/amd_codes.hpp"
#include "nmss/shamir.hpp"

namespace nmss {

/// Threshold sharing of an AMD-encoded secret: a source s in [0, m) is
/// encoded as a uniform K in A_s, and K is Shamir-shared over Z_p. Using a
/// c-circular difference family as the code yields a scheme that resists
/// the additive relation s' = s + c mod m.
class ComposedScheme {
 public:
  /// The code's group order must equal the field modulus.
  ComposedScheme(AmdCode code, ThresholdParams threshold);

  const AmdCode& code() const noexcept { return code_; }
  const ThresholdParams& threshold() const noexcept { return threshold_; }
  std::uint32_t secret_space_size() const noexcept { return code_.sources(); }

 private:
  AmdCode code_;
  ThresholdParams threshold_;
};

/// Full record of one sharing; `encoded` and `polynomial` are dealer-side
/// state for tests and game harnesses, never handed to shareholders.
struct TracedSharing {
  FieldElement encoded;
  Dealing dealing;
};

/// The encoding index is drawn first, then the polynomial coefficients.
ShareVector share_secret(const ComposedScheme& scheme, std::uint32_t secret, RandomSource& rng);
TracedSharing share_secret_traced(const ComposedScheme& scheme, std::uint32_t secret,
                                  RandomSource& rng);

struct Recovery {
  FieldElement encoded;
  /// nullopt: the interpolated K lies in no A_s, i.e. manipulation detected.
  std::optional<std::uint32_t> secret;

  bool manipulation_detected() const noexcept { return !secret.has_value(); }
};

Recovery recover_secret(const ComposedScheme& scheme, std::span<const Share> shares);

/// Folds additive offsets delta_1..delta_t on the first t shares into one
/// offset on share 1 with the same effect on the interpolated value:
/// returns (sum_i b_i delta_i) * b_1^{-1}. `lagrange` holds the coefficients
/// of the reconstruction set, controlled shares first. Throws
/// std::invalid_argument if deltas is empty or longer than lagrange, or if
/// b_1 is zero.
FieldElement collapse_to_single_delta(std::span<const FieldElement> deltas,
                                      std::span<const FieldElement> lagrange);

}  // namespace nmss
