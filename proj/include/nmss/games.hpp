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

// Executable robustness and relation-malleability games.
//
// A game deals a secret, hands the first t shares (participants 1..t) to an
// adversary, lets it rewrite their ordinates, and reconstructs from those t
// bad shares plus k - t good shares whose identifiers the adversary
// nominated up front. The adversary only ever sees an AdversaryView: its own
// shares, the public identifiers of the reconstruction set and their
// Lagrange coefficients. Good ordinates are not reachable from that view.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nmss/amd_codes.hpp"
#include "nmss/nm_schemes.hpp"
#include "nmss/rational.hpp"
#include "nmss/shamir.hpp"

namespace nmss {

/// Either plain Shamir over Z_p (secrets are all of Z_p, every value valid)
/// or a ComposedScheme (secrets [0, m), detection possible).
class SharingScheme {
 public:
  static SharingScheme plain(ThresholdParams params);
  static SharingScheme composed(ComposedScheme scheme);

  bool is_plain() const noexcept { return std::holds_alternative<ThresholdParams>(impl_); }
  const ThresholdParams& threshold() const noexcept;
  const ComposedScheme* composed_scheme() const noexcept {
    return std::get_if<ComposedScheme>(&impl_);
  }

  /// p for plain Shamir, m for a composed scheme.
  std::uint32_t secret_count() const noexcept;
  /// Number of encoded values per secret: 1 for plain Shamir, l otherwise.
  std::uint32_t encodings_per_secret() const noexcept;
  Residue encoding(std::uint32_t secret, std::uint32_t index) const;
  /// Secret encoded by K, or nullopt when K is not a codeword.
  std::optional<std::uint32_t> decode(Residue encoded) const noexcept;

  TracedSharing share(std::uint32_t secret, RandomSource& rng) const;
  /// nullopt means manipulation detected.
  std::optional<std::uint32_t> recover(std::span<const Share> shares) const;

  /// "plain-shamir(p=13,k=2,n=3)" or "composed(p=13,m=3,l=2,k=2,n=3)".
  std::string describe() const;

 private:
  explicit SharingScheme(std::variant<ThresholdParams, ComposedScheme> impl)
      : impl_(std::move(impl)) {}

  std::variant<ThresholdParams, ComposedScheme> impl_;
};

/// Irreflexive relation s' ~ s on the secret space.
class Relation {
 public:
  enum class Kind { kNotEqual, kAdditiveShift, kShiftSet, kCustom };

  static Relation not_equal();
  /// s' ~ s iff s' = s + c mod m; needs 0 < c < m.
  static Relation additive_shift(std::uint32_t c, std::uint32_t m);
  /// s' ~ s iff (s' - s) mod m is in `shifts`; each shift in (0, m).
  static Relation shift_set(std::vector<std::uint32_t> shifts, std::uint32_t m);
  /// Arbitrary predicate over [0, domain). Irreflexivity is checked on every
  /// s when domain <= 65536, otherwise on a fixed sample of 4096 values.
  static Relation custom(std::function<bool(std::uint32_t, std::uint32_t)> predicate,
                         std::uint32_t domain, std::string name = "custom");

  Kind kind() const noexcept { return kind_; }
  /// Secret-space size the relation is defined over; nullopt for NotEqual.
  std::optional<std::uint32_t> domain() const noexcept { return domain_; }
  bool holds(std::uint32_t s_prime, std::uint32_t s) const;
  /// "neq", "shift:c", "set:1,2" or the custom name.
  std::string describe() const;

 private:
  Relation() = default;

  Kind kind_ = Kind::kNotEqual;
  std::optional<std::uint32_t> domain_;
  std::vector<std::uint32_t> shifts_;
  std::function<bool(std::uint32_t, std::uint32_t)> predicate_;
  std::string name_;
};

/// Everything an adversary may look at. Controlled shares come first in
/// `reconstruction_xs` and `lagrange`.
struct AdversaryView {
  std::span<const Share> controlled;
  std::span<const FieldElement> reconstruction_xs;
  std::span<const FieldElement> lagrange;
};

class Adversary {
 public:
  /// New ordinates for the controlled shares, in order. Identifiers cannot
  /// be changed.
  using TamperFn = std::function<std::vector<FieldElement>(const AdversaryView&)>;
  /// Participant identifiers (1-based) of the k - t good shares, chosen
  /// before anything secret is seen.
  using NominateFn = std::function<std::vector<std::uint32_t>(
      const ThresholdParams&, std::span<const std::uint32_t> controlled_ids)>;

  Adversary(std::string name, TamperFn tamper, NominateFn nominate = {});

  const std::string& name() const noexcept { return name_; }
  std::vector<FieldElement> tamper(const AdversaryView& view) const { return tamper_(view); }
  std::vector<std::uint32_t> nominate(const ThresholdParams& params,
                                      std::span<const std::uint32_t> controlled_ids) const;

 private:
  std::string name_;
  TamperFn tamper_;
  NominateFn nominate_;
};

/// Default nomination: the lowest identifiers not controlled, so the
/// reconstruction set is {1..k} when participants 1..t are controlled.
std::vector<std::uint32_t> default_nomination(const ThresholdParams& params,
                                              std::span<const std::uint32_t> controlled_ids);

struct GameTranscript {
  std::uint32_t true_secret = 0;
  /// Reconstructed secret; nullopt when the scheme detected manipulation.
  std::optional<std::uint32_t> reconstructed;
  bool win = false;
  std::uint64_t seed = 0;

  bool detected() const noexcept { return !reconstructed.has_value(); }
  bool operator==(const GameTranscript&) const = default;
};

/// Optional nonnegative integer weights over the secret space; empty means
/// uniform.
using SecretWeights = std::vector<std::uint64_t>;

/// Win iff the reconstruction is a valid secret different from the dealt one.
GameTranscript play_robustness(const SharingScheme& scheme, const Adversary& adversary,
                               std::uint32_t t, std::uint64_t seed,
                               const SecretWeights& weights = {});

/// Win iff the reconstruction is a valid s' with s' != s and s' ~ s.
GameTranscript play_malleability(const SharingScheme& scheme, const Relation& relation,
                                 const Adversary& adversary, std::uint32_t t, std::uint64_t seed,
                                 const SecretWeights& weights = {});

/// Adds delta to the first controlled ordinate. Against plain Shamir the
/// reconstructed value moves by b_1 * delta. Throws for delta = 0.
Adversary shamir_offset_attack(FieldElement delta);

/// Moves the interpolated value by exactly `offset` by adding
/// offset * b_1^{-1} to the first controlled share. offset must be nonzero
/// and below p.
Adversary encoded_offset_attack(std::uint32_t offset);

/// encoded_offset_attack(c): against plain Shamir this realizes s' = s + c.
Adversary additive_relation_attack(std::uint32_t c);

/// Adds deltas[i] to controlled share i.
Adversary multi_share_offset_attack(std::vector<std::uint32_t> deltas);

/// Submits the controlled shares unchanged.
Adversary replay_adversary();

/// Best success probability over all additive offsets Delta != 0 on the
/// encoded value, by enumeration of the (secret, encoding) space. Any
/// tampering of t < k Shamir shares acts as such an offset, so this is the
/// exact game value. Validates 1 <= t < k.
AdvantageReport exact_win_probability(const SharingScheme& scheme, const Relation& relation,
                                      std::uint32_t t, const SecretWeights& weights = {});

/// Plays `trials` independent games; trial i uses trial_seed(seed, i).
/// `threads` > 1 partitions trials across workers without changing counts.
Rational estimate_win_probability(const SharingScheme& scheme, const Relation& relation,
                                  const Adversary& adversary, std::uint32_t t,
                                  std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads = 1, const SecretWeights& weights = {});

}  // namespace nmss
