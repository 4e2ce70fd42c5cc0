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

#include "nmss/diff_families.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace nmss {
namespace {

using namespace nmss::testing;

std::vector<std::uint32_t> sorted_elements(const DifferenceMultiset& d) {
  std::vector<std::uint32_t> out;
  for (Residue g = 0; g < d.n(); ++g) {
    for (std::uint64_t k = 0; k < d.count(g); ++k) out.push_back(g);
  }
  return out;
}

TEST(SetFamily, Validation) {
  EXPECT_THROW(SetFamily(1, {{0}, {0}}), std::invalid_argument);
  EXPECT_THROW(SetFamily(13, {{1, 12}}), std::invalid_argument);
  EXPECT_THROW(SetFamily(13, {{}, {}}), std::invalid_argument);
  EXPECT_THROW(SetFamily(13, {{1, 12}, {4}}), std::invalid_argument);
  EXPECT_THROW(SetFamily(13, {{1, 13}, {4, 9}}), std::invalid_argument);
  EXPECT_THROW(SetFamily(13, {{1, 12}, {4, 12}}), std::invalid_argument);
  EXPECT_THROW(SetFamily(13, {{1, 1}, {4, 9}}), std::invalid_argument);
}

TEST(SetFamily, OwnerAndEquality) {
  SetFamily f = ex13();
  EXPECT_EQ(f.owner(9), 1U);
  EXPECT_EQ(f.owner(2), std::nullopt);
  EXPECT_EQ(f.owner(99), std::nullopt);
  EXPECT_TRUE(f.same_sets_as(SetFamily(13, {{12, 1}, {9, 4}, {10, 3}})));
  EXPECT_FALSE(f.same_sets_as(SetFamily(13, {{4, 9}, {1, 12}, {3, 10}})));
  EXPECT_FALSE(f == SetFamily(13, {{12, 1}, {9, 4}, {10, 3}}));
}

TEST(ExternalDifference, WorkedExamples) {
  std::vector<Residue> a0{1, 12}, a1{4, 9}, a2{3, 10};
  EXPECT_EQ(sorted_elements(external_difference(a1, a0, 13)),
            (std::vector<std::uint32_t>{3, 5, 8, 10}));
  EXPECT_EQ(sorted_elements(external_difference(a2, a1, 13)),
            (std::vector<std::uint32_t>{1, 6, 7, 12}));
  EXPECT_EQ(sorted_elements(external_difference(a0, a2, 13)),
            (std::vector<std::uint32_t>{2, 4, 9, 11}));
  std::vector<Residue> x{1}, y{2};
  EXPECT_EQ(sorted_elements(external_difference(x, y, 5)), (std::vector<std::uint32_t>{4}));
}

TEST(ExternalDifference, RejectsBadInput) {
  std::vector<Residue> empty, a{1, 2}, b{2, 3}, c{5};
  EXPECT_THROW(external_difference(empty, a, 7), std::invalid_argument);
  EXPECT_THROW(external_difference(a, b, 7), std::invalid_argument);
  EXPECT_THROW(external_difference(a, c, 5), std::invalid_argument);
}

TEST(ExternalDifference, MatchesNaiveOracle) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint32_t n = 4 + gen() % 60;
    std::uint32_t l = 1 + gen() % (n / 2);
    SetFamily f = random_family(gen, n, 2, l);
    auto d = external_difference(f.set(0), f.set(1), n);
    ASSERT_EQ(sorted_elements(d), naive_differences(f.sets()[0], f.sets()[1], n));
    ASSERT_EQ(d.total(), static_cast<std::uint64_t>(l) * l);
  }
}

TEST(VerifyCedf, Examples) {
  for (const SetFamily& f : cedf_examples()) {
    auto r = verify_cedf(f, 1);
    EXPECT_TRUE(r.valid) << f.n();
    EXPECT_EQ(r.lambda, 1U);
    EXPECT_FALSE(r.violation.has_value());
  }
}

TEST(VerifyCedf, BrokenFamilyReportsViolation) {
  SetFamily broken(13, {{1, 11}, {4, 9}, {3, 10}});
  auto r = verify_cedf(broken, 1);
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.violation.has_value());
  auto counts = naive_shift_counts(broken.sets(), 13, {1});
  EXPECT_FALSE(naive_uniform(counts));
  EXPECT_EQ(r.violation->observed, counts[r.violation->element]);
  EXPECT_NE(r.violation->observed, r.violation->expected);
}

TEST(VerifyCedf, ShiftRange) {
  EXPECT_THROW(verify_cedf(ex13(), 0), std::invalid_argument);
  EXPECT_THROW(verify_cedf(ex13(), 3), std::invalid_argument);
}

TEST(VerifyCedf, AnyOneCedfIsAnMMinusOneCedf) {
  for (const SetFamily& f : cedf_examples()) {
    auto r = verify_cedf(f, f.m() - 1);
    EXPECT_TRUE(r.valid) << f.n();
    EXPECT_EQ(r.lambda, 1U);
  }
}

TEST(VerifySedf, Examples) {
  const std::vector<std::uint32_t> s{1, 2};
  for (const SetFamily& f : sedf_examples()) {
    auto r = verify_sedf(f, s);
    EXPECT_TRUE(r.valid) << f.n();
    EXPECT_EQ(r.lambda, 2U);
  }
}

TEST(VerifySedf, SingletonMatchesCedf) {
  std::mt19937_64 gen(5);
  std::vector<SetFamily> fams = cedf_examples();
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t m = 2 + gen() % 3;
    const std::uint32_t l = 1 + gen() % 2;
    fams.push_back(random_family(gen, m * l + 1 + gen() % 40, m, l));
  }
  for (const SetFamily& f : fams) {
    for (std::uint32_t c = 1; c < f.m(); ++c) {
      const std::uint32_t s[] = {c};
      auto a = verify_sedf(f, s);
      auto b = verify_cedf(f, c);
      ASSERT_EQ(a.valid, b.valid);
      ASSERT_EQ(a.lambda, b.lambda);
      ASSERT_EQ(a.violation.has_value(), b.violation.has_value());
    }
  }
}

TEST(VerifySedf, RejectsBadShiftSets) {
  std::vector<std::uint32_t> empty, dup{1, 1}, range{1, 7};
  EXPECT_THROW(verify_sedf(sedf29(), empty), std::invalid_argument);
  EXPECT_THROW(verify_sedf(sedf29(), dup), std::invalid_argument);
  EXPECT_THROW(verify_sedf(sedf29(), range), std::invalid_argument);
}

TEST(VerifySedf, FullShiftSetOnCedf) {
  for (const SetFamily& f : cedf_examples()) {
    std::vector<std::uint32_t> all;
    for (std::uint32_t c = 1; c < f.m(); ++c) all.push_back(c);
    auto r = verify_sedf(f, all);
    auto counts = naive_shift_counts(f.sets(), f.n(), all);
    ASSERT_EQ(r.valid, naive_uniform(counts));
    if (r.valid) {
      EXPECT_EQ(r.lambda * (f.n() - 1),
                static_cast<std::uint64_t>(f.m() - 1) * f.m() * f.set_size() * f.set_size());
    }
  }
}

TEST(VerifySedf, RandomFamiliesMatchNaiveOracle) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 400; ++trial) {
    std::uint32_t m = 2 + gen() % 4;
    std::uint32_t l = 1 + gen() % 3;
    std::uint32_t n = m * l + 1 + gen() % 20;
    SetFamily f = random_family(gen, n, m, l);
    std::vector<std::uint32_t> s;
    for (std::uint32_t c = 1; c < m; ++c) {
      if (gen() % 2) s.push_back(c);
    }
    if (s.empty()) s.push_back(1);
    auto r = verify_sedf(f, s);
    auto counts = naive_shift_counts(f.sets(), n, s);
    ASSERT_EQ(r.valid, naive_uniform(counts));
    if (r.valid) ASSERT_EQ(r.lambda, counts[1]);
    if (!r.valid) ASSERT_EQ(counts[r.violation->element], r.violation->observed);
  }
}

TEST(VerifyScedf, Examples) {
  auto r = verify_scedf(ex13(), 1);
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.violation.has_value());
  EXPECT_EQ(r.violation->pair_index, 0U);

  // {2,4} - {0,1} = {2,1,4,3}.
  auto ok = verify_scedf(SetFamily(5, {{0, 1}, {2, 4}}), 1);
  EXPECT_TRUE(ok.valid);
  EXPECT_EQ(ok.lambda, 1U);

  EXPECT_FALSE(verify_scedf(SetFamily(5, {{1}, {2}}), 1).valid);
}

TEST(VerifyScedf, LengthTwoCircularFamiliesAreNotPerPairUniform) {
  // With l = 2 each shifted pair yields only 4 differences, so the per-pair
  // multiset equation cannot hold once n - 1 > 4.
  for (const SetFamily& f : {ex13(), ex17(), ex29()}) {
    ASSERT_TRUE(verify_cedf(f, 1).valid);
    EXPECT_FALSE(verify_scedf(f, 1).valid) << f.n();
  }
  // n - 1 = l^2 = 4 is the only case where a two-element family can be strong.
  EXPECT_TRUE(verify_scedf(SetFamily(5, {{0, 1}, {2, 4}}), 1).valid);
}

TEST(VerifyScedf, LengthThreeFamilyInZ10) {
  SetFamily f(10, {{0, 1, 2}, {3, 6, 9}});
  auto r = verify_scedf(f, 1);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.lambda, 1U);
  EXPECT_TRUE(naive_uniform(naive_shift_counts({f.sets()[0], f.sets()[1]}, 10, {1})));
}

TEST(VerifyScedf, StrongImpliesCircular) {
  std::mt19937_64 gen(23);
  int strong_seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::uint32_t l = 1 + gen() % 3;
    std::uint32_t n = l * l + 1;
    SetFamily f = random_family(gen, n, 2, l);
    auto strong = verify_scedf(f, 1);
    auto pair0 = naive_differences(f.sets()[1], f.sets()[0], n);
    auto pair1 = naive_differences(f.sets()[0], f.sets()[1], n);
    std::vector<std::uint64_t> c0(n, 0), c1(n, 0);
    for (auto d : pair0) ++c0[d];
    for (auto d : pair1) ++c1[d];
    ASSERT_EQ(strong.valid, naive_uniform(c0) && naive_uniform(c1));
    if (strong.valid) {
      ++strong_seen;
      ASSERT_TRUE(verify_cedf(f, 1).valid);
    }
  }
  EXPECT_GT(strong_seen, 0);
}

TEST(ShiftFamily, ReordersBySInverse) {
  SetFamily f = ex29();
  SetFamily g = shift_family(f, 2);
  const auto& a = f.sets();
  EXPECT_EQ(g.sets(), (Sets{a[0], a[4], a[1], a[5], a[2], a[6], a[3]}));
  EXPECT_TRUE(verify_cedf(g, 2).valid);
  EXPECT_EQ(shift_family(f, 1), f);
}

TEST(ShiftFamily, AllCoprimeShiftsOnExamples) {
  for (const SetFamily& f : cedf_examples()) {
    for (std::uint32_t c = 1; c < f.m(); ++c) {
      if (std::gcd(c, f.m()) != 1) {
        EXPECT_THROW(shift_family(f, c), std::invalid_argument);
        continue;
      }
      SetFamily g = shift_family(f, c);
      ASSERT_TRUE(naive_cedf(g, c)) << f.n() << " c=" << c;
      ASSERT_EQ(verify_cedf(g, c).lambda, 1U);
    }
  }
}

TEST(ShiftFamily, ThreeSetExampleIsAlreadyTwoCircular) {
  EXPECT_TRUE(verify_cedf(ex13(), 2).valid);
}

TEST(ShiftFamily, RejectsNonCedf) {
  EXPECT_THROW(shift_family(SetFamily(13, {{1, 11}, {4, 9}, {3, 10}}), 2), std::invalid_argument);
}

}  // namespace
}  // namespace nmss
