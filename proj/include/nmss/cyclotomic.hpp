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

// Cyclotomic candidates for circular difference families in Z_q with
// q = m l^2 + 1 prime, the closed-form success criteria, and search drivers.
//
// For a primitive root a, C_0 = { a^{i l m} : 0 <= i < l } is the subgroup of
// order l and C_j = a^{l j} C_0. The tuple (C_0, ..., C_{m-1}) is a
// (q, m, l; 1) 1-circular family exactly when the l values
// b^{i m + 1} - 1 (b = a^l) represent distinct cosets of <b>.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nmss/prime_field.hpp"
#include "nmss/set_family.hpp"

namespace nmss {

class ConstructionParams {
 public:
  /// Throws std::invalid_argument unless q is an odd prime, m >= 2, l >= 1,
  /// q - 1 = m l^2 and alpha is a primitive root mod q.
  ConstructionParams(std::uint32_t q, std::uint32_t m, std::uint32_t l, std::uint32_t alpha);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.modulus(); }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t l() const noexcept { return l_; }
  FieldElement alpha() const noexcept { return alpha_; }

 private:
  PrimeField field_;
  std::uint32_t m_;
  std::uint32_t l_;
  FieldElement alpha_;
};

/// Throws std::invalid_argument unless q is prime, m >= 2, l >= 1 and
/// q - 1 = m l^2.
void check_cyclotomic_shape(std::uint32_t q, std::uint32_t m, std::uint32_t l);

SetFamily cyclotomic_family(const ConstructionParams& params);

/// l = 2 criterion: a^4 - 1 is a quadratic non-residue. Needs q = 1 mod 4
/// and a primitive; throws std::domain_error if a^4 = 1.
bool nonresidue_criterion(FieldElement alpha);

/// General criterion: { b^{i m + 1} - 1 : 0 <= i < l } is a full set of
/// coset representatives of H = <a^l> in Z_q^*.
bool coset_criterion(const ConstructionParams& params);

struct SearchResult {
  std::uint32_t q = 0;
  std::uint32_t m = 0;
  std::uint32_t l = 0;
  /// Primitive roots whose construction verifies, ascending.
  std::vector<std::uint32_t> witnesses;
  std::uint64_t examined = 0;
};

/// Tries every primitive root in increasing order. Each candidate is
/// checked both by the difference verifier and by coset_criterion; a
/// disagreement throws std::logic_error. `threads` partitions the roots.
SearchResult search_parameter_set(std::uint32_t q, std::uint32_t m, std::uint32_t l,
                                  unsigned threads = 1);

struct TableRow {
  std::uint32_t p;
  std::uint32_t m;
  std::uint32_t l;
  std::uint32_t alpha;
};

/// The 43 published (p, m, l, alpha) parameter sets with m <= 50, l <= 10
/// for which the construction yields a (p, m, l; 1) 1-circular family.
std::span<const TableRow> published_table();

/// Largest m accepted by the exhaustive ordering search.
inline constexpr std::uint32_t kMaxPermutationSearchM = 9;

/// Orderings of the m cyclotomic classes (class containing 1 fixed first,
/// the rest in lexicographic permutation order) that verify as an S-external
/// difference family. Throws std::invalid_argument if m exceeds
/// kMaxPermutationSearchM; use search_sedf_random for larger m.
std::vector<SetFamily> search_sedf_permutations(std::uint32_t q, std::uint32_t m, std::uint32_t l,
                                                std::span<const std::uint32_t> shifts);

/// Random orderings of the classes (class containing 1 first); returns the
/// distinct verifying families in discovery order.
std::vector<SetFamily> search_sedf_random(std::uint32_t q, std::uint32_t m, std::uint32_t l,
                                          std::span<const std::uint32_t> shifts,
                                          std::uint64_t seed, std::uint64_t attempts);

struct ScedfLevel {
  /// Partial families (A_0..A_d) generated at this depth.
  std::uint64_t generated = 0;
  /// Those passing every per-pair check that is already decidable.
  std::uint64_t passed = 0;
};

struct ScedfGroupCertificate {
  std::uint32_t n = 0;
  /// "searched", "skipped:parameter-identity", "skipped:too-few-elements"
  /// or "budget-exhausted".
  std::string status;
  std::uint64_t lambda = 0;
  std::vector<ScedfLevel> levels;
  std::uint64_t found = 0;
};

struct ScedfSearchResult {
  std::uint32_t n_max = 0;
  std::uint32_t m = 0;
  std::uint32_t l = 0;
  std::uint32_t c = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  /// False if the node budget ran out; the result is then inconclusive.
  bool complete = true;
  std::vector<ScedfGroupCertificate> groups;
  std::vector<SetFamily> families;
};

/// Exhaustive search for c-circular strong families of m sets of size l in
/// Z_n, 2 <= n <= n_max, up to translation (0 is forced into A_0; sets are
/// stored ascending). Groups where (n - 1) does not divide l^2 are skipped.
/// Stops once `budget` partial families have been generated.
ScedfSearchResult search_scedf(std::uint32_t n_max, std::uint32_t m, std::uint32_t l,
                               std::uint32_t c, std::uint64_t budget = 50'000'000);

/// Re-derives every level count of the certificate from binomial
/// coefficients, re-verifies each reported family and checks the skip
/// reasons. Returns an empty string when consistent, else a description of
/// the first inconsistency.
std::string check_scedf_certificate(const ScedfSearchResult& result);

}  // namespace nmss
