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

#include "nmss/shamir.hpp"

#include <stdexcept>
#include <string>

namespace nmss {

ThresholdParams::ThresholdParams(std::uint32_t k, std::uint32_t n, PrimeField field)
    : k_(k), n_(n), field_(std::move(field)) {
  if (k_ < 2 || k_ > n_) {
    throw std::invalid_argument("threshold needs 2 <= k <= n, got k=" + std::to_string(k_) +
                                " n=" + std::to_string(n_));
  }
  if (field_.modulus() < static_cast<std::uint64_t>(n_) + 1) {
    throw std::invalid_argument("field too small: p=" + std::to_string(field_.modulus()) +
                                " < n+1=" + std::to_string(n_ + 1));
  }
}

FieldElement Polynomial::evaluate(FieldElement x) const {
  FieldElement acc = x.zero_like();
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Dealing deal(const ThresholdParams& params, FieldElement secret, RandomSource& rng) {
  const PrimeField& field = params.field();
  if (secret.modulus() != field.modulus()) {
    throw std::invalid_argument("secret lives in a different field");
  }
  Polynomial f;
  f.coefficients.reserve(params.k());
  f.coefficients.push_back(secret);
  for (std::uint32_t i = 1; i < params.k(); ++i) {
    f.coefficients.push_back(field.element(static_cast<std::int64_t>(rng.below(field.modulus()))));
  }
  std::vector<Share> shares;
  shares.reserve(params.n());
  for (std::uint32_t i = 1; i <= params.n(); ++i) {
    FieldElement x = field.element(i);
    shares.push_back(Share{x, f.evaluate(x)});
  }
  return Dealing{ShareVector{params, std::move(shares)}, std::move(f)};
}

std::vector<FieldElement> lagrange_coefficients(std::span<const FieldElement> xs) {
  if (xs.empty()) throw std::invalid_argument("no interpolation points");
  const FieldElement one = xs.front().one_like();
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (xs[j].modulus() != one.modulus()) {
      throw std::invalid_argument("interpolation points from different fields");
    }
    if (xs[j].is_zero()) throw std::invalid_argument("share identifier 0 is not allowed");
    for (std::size_t h = 0; h < j; ++h) {
      if (xs[h] == xs[j]) {
        throw std::invalid_argument("repeated share identifier " +
                                    std::to_string(xs[j].value()));
      }
    }
  }
  std::vector<FieldElement> b;
  b.reserve(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    FieldElement num = one;
    FieldElement den = one;
    for (std::size_t h = 0; h < xs.size(); ++h) {
      if (h == j) continue;
      num = num * xs[h];
      den = den * (xs[h] - xs[j]);
    }
    b.push_back(num * invert(den));
  }
  return b;
}

FieldElement reconstruct(const ThresholdParams& params, std::span<const Share> shares) {
  if (shares.size() < params.k()) {
    throw std::invalid_argument("need " + std::to_string(params.k()) + " shares, got " +
                                std::to_string(shares.size()));
  }
  auto used = shares.first(params.k());
  std::vector<FieldElement> xs;
  xs.reserve(used.size());
  for (const Share& s : used) {
    if (s.x.modulus() != params.field().modulus() || s.y.modulus() != params.field().modulus()) {
      throw std::invalid_argument("share from a different field");
    }
    xs.push_back(s.x);
  }
  auto b = lagrange_coefficients(xs);
  FieldElement secret = params.field().zero();
  for (std::size_t j = 0; j < used.size(); ++j) secret = secret + b[j] * used[j].y;
  return secret;
}

}  // namespace nmss
