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

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

namespace nmss {

class FieldElement;

/// The prime field Z_p for an odd prime p < 2^31.
///
/// Construction rejects composite or even moduli. The object is a tiny value
/// type; copies are cheap and every element remembers its modulus so that
/// mixing elements of different fields is caught at run time.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = (1U << 31) - 1;

  /// Throws std::invalid_argument unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  /// Reduces an arbitrary signed integer into [0, p).
  FieldElement element(std::int64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;

  /// Distinct prime factors of p - 1, ascending.
  const std::vector<std::uint32_t>& order_factors() const noexcept {
    return order_factors_;
  }

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> order_factors_;
};

class FieldElement {
 public:
  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  /// Additive and multiplicative identities of this element's field.
  FieldElement zero_like() const noexcept { return FieldElement(0, p_); }
  FieldElement one_like() const noexcept { return FieldElement(1, p_); }
  /// v reduced into this element's field.
  FieldElement with_value(std::int64_t v) const noexcept;

  /// Equality requires the same field; comparing across fields throws.
  bool operator==(const FieldElement& o) const;
  std::strong_ordering operator<=>(const FieldElement& o) const;

 private:
  friend class PrimeField;
  friend FieldElement add(FieldElement, FieldElement);
  friend FieldElement mul(FieldElement, FieldElement);
  friend FieldElement neg(FieldElement);
  friend FieldElement invert(FieldElement);
  friend FieldElement pow(FieldElement, std::uint64_t);
  FieldElement(std::uint32_t v, std::uint32_t p) noexcept : value_(v), p_(p) {}

  std::uint32_t value_;
  std::uint32_t p_;
};

FieldElement add(FieldElement a, FieldElement b);
FieldElement sub(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement neg(FieldElement a);

/// Multiplicative inverse; throws std::domain_error for zero.
FieldElement invert(FieldElement a);

/// Square-and-multiply exponentiation. 0^0 throws std::domain_error.
FieldElement pow(FieldElement a, std::uint64_t e);

/// Euler's criterion. Throws std::domain_error for zero.
bool is_quadratic_residue(FieldElement a);

/// True iff a generates the multiplicative group. Throws for zero.
bool is_primitive(FieldElement a);

/// All primitive roots of the field in increasing order.
std::vector<FieldElement> enumerate_primitive_roots(const PrimeField& field);

/// Deterministic primality test for 32-bit integers.
bool is_prime(std::uint64_t n);

inline FieldElement operator+(FieldElement a, FieldElement b) { return add(a, b); }
inline FieldElement operator-(FieldElement a, FieldElement b) { return sub(a, b); }
inline FieldElement operator*(FieldElement a, FieldElement b) { return mul(a, b); }
inline FieldElement operator-(FieldElement a) { return neg(a); }

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

}  // namespace nmss
