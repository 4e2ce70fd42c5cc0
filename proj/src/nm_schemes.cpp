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

#include "nmss/nm_schemes.hpp"

#include <stdexcept>
#include <string>

namespace nmss {

ComposedScheme::ComposedScheme(AmdCode code, ThresholdParams threshold)
    : code_(std::move(code)), threshold_(std::move(threshold)) {
  if (code_.family().n() != threshold_.field().modulus()) {
    throw std::invalid_argument("code group Z_" + std::to_string(code_.family().n()) +
                                " does not match field Z_" +
                                std::to_string(threshold_.field().modulus()));
  }
}

TracedSharing share_secret_traced(const ComposedScheme& scheme, std::uint32_t secret,
                                  RandomSource& rng) {
  if (secret >= scheme.secret_space_size()) {
    throw std::out_of_range("secret " + std::to_string(secret) + " outside [0, " +
                            std::to_string(scheme.secret_space_size()) + ")");
  }
  const PrimeField& field = scheme.threshold().field();
  FieldElement k = field.element(scheme.code().encode(secret, rng));
  return TracedSharing{k, deal(scheme.threshold(), k, rng)};
}

ShareVector share_secret(const ComposedScheme& scheme, std::uint32_t secret, RandomSource& rng) {
  return share_secret_traced(scheme, secret, rng).dealing.shares;
}

Recovery recover_secret(const ComposedScheme& scheme, std::span<const Share> shares) {
  FieldElement k = reconstruct(scheme.threshold(), shares);
  return Recovery{k, scheme.code().decode(k.value())};
}

FieldElement collapse_to_single_delta(std::span<const FieldElement> deltas,
                                      std::span<const FieldElement> lagrange) {
  if (deltas.empty()) throw std::invalid_argument("no offsets to collapse");
  if (deltas.size() > lagrange.size()) {
    throw std::invalid_argument("more offsets than reconstruction shares");
  }
  if (lagrange.front().is_zero()) throw std::invalid_argument("b_1 must be nonzero");
  FieldElement total = lagrange.front().zero_like();
  for (std::size_t i = 0; i < deltas.size(); ++i) total = total + lagrange[i] * deltas[i];
  return total * invert(lagrange.front());
}

}  // namespace nmss
