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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "nmss/amd_codes.hpp"
#include "nmss/cyclotomic.hpp"
#include "nmss/diff_families.hpp"
#include "nmss/games.hpp"
#include "nmss/nm_schemes.hpp"
#include "nmss/shamir.hpp"
#include "support.hpp"

namespace {

using namespace nmss;
using namespace nmss::testing;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Criterion = std::function<Outcome()>;

Outcome ac1_examples() {
  Outcome o;
  for (const SetFamily& f : cedf_examples()) {
    auto r = verify_cedf(f, 1);
    o.require(r.valid && r.lambda == 1, "1-circular example in Z_" + std::to_string(f.n()));
  }
  const std::uint32_t s[] = {1, 2};
  for (const SetFamily& f : sedf_examples()) {
    auto r = verify_sedf(f, s);
    o.require(r.valid && r.lambda == 2, "{1,2} example in Z_" + std::to_string(f.n()));
  }
  if (o.ok) o.detail = "5 one-circular families (lambda=1), 3 {1,2}-families (lambda=2)";
  return o;
}

Outcome ac2_table() {
  Outcome o;
  std::size_t passed = 0;
  std::uint32_t largest = 0;
  for (const TableRow& row : published_table()) {
    auto r = verify_cedf(cyclotomic_family(ConstructionParams(row.p, row.m, row.l, row.alpha)), 1);
    bool ok = r.valid && r.lambda == 1;
    o.require(ok, "row p=" + std::to_string(row.p) + " m=" + std::to_string(row.m));
    passed += ok;
    largest = std::max(largest, row.p);
  }
  o.require(published_table().size() == 43, "table does not have 43 rows");
  if (o.ok) {
    o.detail = std::to_string(passed) + "/43 rows, largest p=" + std::to_string(largest);
  }
  return o;
}

Outcome ac3_nonresidue() {
  Outcome o;
  std::size_t primes = 0, roots = 0, successes = 0;
  // q = 5 has m = 1 and alpha^4 = 1, so the construction is undefined there.
  for (std::uint32_t q = 13; q <= 1000; q += 4) {
    if (!is_prime(q)) continue;
    ++primes;
    const std::uint32_t m = (q - 1) / 4;
    for (auto a : enumerate_primitive_roots(PrimeField(q))) {
      ++roots;
      bool built = verify_cedf(cyclotomic_family(ConstructionParams(q, m, 2, a.value())), 1).valid;
      successes += built;
      o.require(built == nonresidue_criterion(a),
                "q=" + std::to_string(q) + " alpha=" + std::to_string(a.value()));
    }
  }
  if (o.ok) {
    std::ostringstream os;
    os << primes << " primes, " << roots << " primitive roots, " << successes
       << " constructions succeed, 0 disagreements";
    o.detail = os.str();
  }
  return o;
}

Outcome ac4_coset() {
  Outcome o;
  std::size_t roots = 0, successes = 0;
  for (const TableRow& row : published_table()) {
    for (auto a : enumerate_primitive_roots(PrimeField(row.p))) {
      ++roots;
      ConstructionParams params(row.p, row.m, row.l, a.value());
      bool built = verify_cedf(cyclotomic_family(params), 1).valid;
      successes += built;
      o.require(built == coset_criterion(params),
                "p=" + std::to_string(row.p) + " alpha=" + std::to_string(a.value()));
    }
  }
  if (o.ok) {
    o.detail = "43 parameter sets, " + std::to_string(roots) + " primitive roots, " +
               std::to_string(successes) + " succeed, 0 disagreements";
  }
  return o;
}

Outcome ac5_r_optimal() {
  Outcome o;
  for (const SetFamily& f : cedf_examples()) {
    AmdCode code(f);
    o.require(is_r_optimal_circular(code, 1) &&
                  circular_weak_advantage(code, 1).epsilon == Rational(f.set_size(), f.n() - 1),
              "example in Z_" + std::to_string(f.n()));
  }
  o.require(circular_weak_advantage(AmdCode(ex13()), 1).epsilon == Rational(1, 6),
            "(13,3,2) epsilon is not 1/6");

  std::vector<SetFamily> bases;
  for (const SetFamily& f : cedf_examples()) {
    if (f.n() <= 60) bases.push_back(f);
  }
  for (const TableRow& row : published_table()) {
    if (row.p <= 60) bases.push_back(cyclotomic_family(ConstructionParams(row.p, row.m, row.l, row.alpha)));
  }
  std::mt19937_64 gen(20240611);
  const int perturbations = 300;
  int restored = 0;
  for (int i = 0; i < perturbations; ++i) {
    SetFamily f = perturb(gen, bases[gen() % bases.size()]);
    bool cedf = verify_cedf(f, 1).valid;
    restored += cedf;
    o.require(is_r_optimal_circular(AmdCode(f), 1) == cedf, "perturbed family disagrees");
  }
  if (o.ok) {
    o.detail = "5 examples at l/(n-1); " + std::to_string(perturbations) +
               " perturbed families (n<=60) agree, " + std::to_string(restored) +
               " still circular";
  }
  return o;
}

Outcome ac6_attacks() {
  Outcome o;
  const std::uint64_t trials = 1000;
  for (std::uint32_t p : {13U, 29U}) {
    SharingScheme plain = SharingScheme::plain(ThresholdParams(2, 3, PrimeField(p)));
    Adversary offset = shamir_offset_attack(PrimeField(p).element(1));
    std::uint64_t wins = 0;
    for (std::uint64_t i = 0; i < trials; ++i) wins += play_robustness(plain, offset, 1, trial_seed(p, i)).win;
    o.require(wins == trials, "robustness p=" + std::to_string(p));
    for (std::uint32_t c : {1U, 2U}) {
      Rational f = estimate_win_probability(plain, Relation::additive_shift(c, p),
                                            additive_relation_attack(c), 1, trials, 1000 + c);
      o.require(f == Rational(1, 1), "shift p=" + std::to_string(p) + " c=" + std::to_string(c));
    }
  }
  if (o.ok) o.detail = "6 configurations x 1000 trials, frequency 1 in each";
  return o;
}

Outcome ac7_bound() {
  Outcome o;
  SharingScheme s = SharingScheme::composed(
      ComposedScheme(AmdCode(ex13()), ThresholdParams(2, 3, PrimeField(13))));
  Relation rel = Relation::additive_shift(1, 3);
  AdvantageReport exact = exact_win_probability(s, rel, 1);
  o.require(exact.epsilon == Rational(1, 6), "exact value is not 1/6");
  const std::uint64_t seed = 0x5eed;
  Rational est = estimate_win_probability(s, rel, encoded_offset_attack(exact.best_deltas.front()),
                                          1, 100000, seed);
  const double gap = std::abs(est.to_double() - 1.0 / 6.0);
  o.require(gap <= 0.005, "Monte Carlo off by " + std::to_string(gap));
  std::ostringstream os;
  os << "exact " << exact.epsilon << ", empirical " << est << " = " << est.to_double()
     << " (|gap| " << gap << ", seed " << seed << ")";
  if (o.ok) o.detail = os.str();
  return o;
}

Outcome ac8_privacy() {
  Outcome o;
  ThresholdParams params(2, 3, PrimeField(13));
  for (std::uint32_t s = 0; s < 13; ++s) {
    std::map<std::uint32_t, std::vector<int>> counts;  // participant -> histogram
    for (std::uint64_t a1 = 0; a1 < 13; ++a1) {
      ScriptedRandom rng({a1});
      for (const Share& sh : deal(params, params.field().element(s), rng).shares.shares) {
        auto& h = counts[sh.x.value()];
        h.resize(13, 0);
        ++h[sh.y.value()];
      }
    }
    for (const auto& [x, h] : counts) {
      o.require(std::all_of(h.begin(), h.end(), [](int c) { return c == 1; }),
                "secret " + std::to_string(s) + " participant " + std::to_string(x));
    }
  }
  if (o.ok) o.detail = "13 secrets x 3 participants x 13 polynomials, every ordinate once";
  return o;
}

Outcome ac9_reduction() {
  Outcome o;
  const std::vector<std::uint32_t> primes{7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                          59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
  std::mt19937_64 gen(9);
  int cases = 0;
  while (cases < 500) {
    const std::uint32_t p = primes[gen() % primes.size()];
    const std::uint32_t k = 2 + gen() % 4;
    const std::uint32_t n = k + gen() % 3;
    if (p < n + 1) continue;
    const std::uint32_t t = 1 + gen() % (k - 1);
    ThresholdParams params(k, n, PrimeField(p));
    SharingScheme scheme = SharingScheme::plain(params);
    std::vector<std::uint32_t> deltas(t);
    for (auto& d : deltas) d = gen() % p;

    std::vector<FieldElement> xs, ds;
    for (std::uint32_t i = 1; i <= k; ++i) xs.push_back(params.field().element(i));
    for (auto d : deltas) ds.push_back(params.field().element(d));
    FieldElement single = collapse_to_single_delta(ds, lagrange_coefficients(xs));
    Adversary one = single.is_zero() ? replay_adversary() : shamir_offset_attack(single);
    const std::uint64_t seed = gen();
    GameTranscript multi = play_robustness(scheme, multi_share_offset_attack(deltas), t, seed);
    GameTranscript folded = play_robustness(scheme, one, t, seed);
    o.require(multi == folded, "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                   " t=" + std::to_string(t));
    ++cases;
  }
  if (o.ok) o.detail = "500 tamperings (p<=101, k<=5), reconstructions identical";
  return o;
}

Outcome ac10_scedf() {
  Outcome o;
  std::ostringstream os;
  for (std::uint32_t m : {2U, 3U}) {
    ScedfSearchResult r = search_scedf(19, m, 3, 1);
    std::string problem = check_scedf_certificate(r);
    o.require(r.complete, "m=" + std::to_string(m) + " search ran out of budget");
    o.require(problem.empty(), "m=" + std::to_string(m) + ": " + problem);
    std::uint64_t searched = 0;
    for (const auto& g : r.groups) searched += g.status == "searched";
    os << "m=" << m << ": n<=19, " << searched << " group(s) searched, " << r.nodes
       << " nodes, " << r.families.size() << " families; ";
  }
  if (o.ok) o.detail = os.str() + "certificates consistent";
  return o;
}

}  // namespace

int main() {
  struct Entry {
    const char* id;
    const char* title;
    double budget_s;
    Criterion run;
  };
  const Entry entries[] = {
      {"AC1", "worked-example families verify", 1.0, ac1_examples},
      {"AC2", "43 table rows verify", 10.0, ac2_table},
      {"AC3", "nonresidue criterion equivalence, q<=1000", 60.0, ac3_nonresidue},
      {"AC4", "coset criterion equivalence, table parameters", 120.0, ac4_coset},
      {"AC5", "circular R-optimality equivalence", 0.0, ac5_r_optimal},
      {"AC6", "offset and additive-relation attacks always win", 0.0, ac6_attacks},
      {"AC7", "composed scheme bound 1/6", 0.0, ac7_bound},
      {"AC8", "Shamir single-share privacy", 0.0, ac8_privacy},
      {"AC9", "multi-share tampering folds to one share", 0.0, ac9_reduction},
      {"AC10", "strong circular search certificate, l=3", 300.0, ac10_scedf},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.budget_s > 0 && secs > e.budget_s) {
      o.ok = false;
      o.detail = "took " + std::to_string(secs) + " s, budget " + std::to_string(e.budget_s) + " s";
    }
    failures += !o.ok;
    std::printf("%-4s %s  %s (%.3f s): %s\n", e.id, o.ok ? "PASS" : "FAIL", e.title, secs,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(entries)) - failures,
              std::size(entries));
  return failures == 0 ? 0 : 1;
}
