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

#include "nmss/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace nmss {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("field elements from different fields: p=" +
                                std::to_string(a.modulus()) + " vs p=" +
                                std::to_string(b.modulus()));
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13}) {
    if (n % small == 0) return n == small;
  }
  // The first twelve primes are exact witnesses for every n < 2^64.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p > kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument("modulus must be an odd prime below 2^31, got " +
                                std::to_string(p));
  }
  order_factors_ = distinct_prime_factors(p - 1);
}

FieldElement PrimeField::element(std::int64_t v) const { return zero().with_value(v); }

FieldElement FieldElement::with_value(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElement(static_cast<std::uint32_t>(r), p_);
}

FieldElement PrimeField::zero() const { return FieldElement(0, p_); }
FieldElement PrimeField::one() const { return FieldElement(1, p_); }

bool FieldElement::operator==(const FieldElement& o) const {
  require_same_field(*this, o);
  return value_ == o.value_;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
  require_same_field(*this, o);
  return value_ <=> o.value_;
}

FieldElement add(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  std::uint32_t s = a.value() + b.value();  // both < 2^31, no overflow
  if (s >= a.modulus()) s -= a.modulus();
  return FieldElement(s, a.modulus());
}

FieldElement sub(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return add(a, neg(b));
}

FieldElement mul(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return FieldElement(static_cast<std::uint32_t>(mulmod(a.value(), b.value(), a.modulus())),
                      a.modulus());
}

FieldElement neg(FieldElement a) {
  return a.is_zero() ? a : FieldElement(a.modulus() - a.value(), a.modulus());
}

FieldElement invert(FieldElement a) {
  if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
  // Extended Euclid on (value, p).
  std::int64_t r0 = a.modulus(), r1 = a.value();
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += a.modulus();
  return FieldElement(static_cast<std::uint32_t>(t0), a.modulus());
}

FieldElement pow(FieldElement a, std::uint64_t e) {
  if (a.is_zero() && e == 0) throw std::domain_error("0^0 is undefined");
  return FieldElement(static_cast<std::uint32_t>(powmod(a.value(), e, a.modulus())),
                      a.modulus());
}

bool is_quadratic_residue(FieldElement a) {
  if (a.is_zero()) throw std::domain_error("quadratic character of zero");
  return pow(a, (a.modulus() - 1) / 2).value() == 1;
}

namespace {

bool has_full_order(FieldElement a, const std::vector<std::uint32_t>& factors) {
  for (std::uint32_t r : factors) {
    if (pow(a, (a.modulus() - 1) / r).value() == 1) return false;
  }
  return true;
}

}  // namespace

bool is_primitive(FieldElement a) {
  if (a.is_zero()) throw std::domain_error("zero is not in the multiplicative group");
  return has_full_order(a, distinct_prime_factors(a.modulus() - 1));
}

std::vector<FieldElement> enumerate_primitive_roots(const PrimeField& field) {
  std::vector<FieldElement> roots;
  for (std::uint32_t v = 1; v < field.modulus(); ++v) {
    FieldElement a = field.element(v);
    if (has_full_order(a, field.order_factors())) roots.push_back(a);
  }
  return roots;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << a.value() << " (mod " << a.modulus() << ")";
}

}  // namespace nmss
