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

#include "nmss/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "nmss/diff_families.hpp"
#include "nmss/random.hpp"

namespace nmss {
namespace {

constexpr TableRow kPublishedTable[] = {
    {13, 3, 2, 2},      {17, 4, 2, 3},      {151, 6, 5, 6},     {29, 7, 2, 2},
    {73, 8, 3, 5},      {37, 9, 2, 2},      {41, 10, 2, 6},     {53, 13, 2, 8},
    {127, 14, 3, 116},  {61, 15, 2, 35},    {241, 15, 4, 7},    {401, 16, 5, 27},
    {73, 18, 2, 5},     {1217, 19, 8, 642}, {181, 20, 3, 57},   {337, 21, 4, 10},
    {757, 21, 6, 2},    {89, 22, 2, 51},    {199, 22, 3, 44},   {97, 24, 2, 5},
    {101, 25, 2, 2},    {401, 25, 4, 3},    {109, 27, 2, 6},    {433, 27, 4, 94},
    {113, 28, 2, 3},    {271, 30, 3, 142},  {137, 34, 2, 3},    {307, 34, 3, 241},
    {577, 36, 4, 230},  {149, 37, 2, 2},    {593, 37, 4, 339},  {157, 39, 2, 142},
    {641, 40, 4, 264},  {379, 42, 3, 233},  {673, 42, 4, 5},    {173, 43, 2, 128},
    {1549, 43, 6, 1165}, {397, 44, 3, 296}, {181, 45, 2, 28},   {193, 48, 2, 5},
    {433, 48, 3, 393},  {769, 48, 4, 453},  {197, 49, 2, 32},
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Cyclotomic classes C_0..C_{m-1} built from the smallest primitive root.
// The classes as sets do not depend on which primitive root is used.
std::vector<std::vector<Residue>> cyclotomic_classes(std::uint32_t q, std::uint32_t m,
                                                     std::uint32_t l) {
  check_cyclotomic_shape(q, m, l);
  const PrimeField field(q);
  const FieldElement alpha = enumerate_primitive_roots(field).front();
  return cyclotomic_family(ConstructionParams(q, m, l, alpha.value())).sets();
}

}  // namespace

void check_cyclotomic_shape(std::uint32_t q, std::uint32_t m, std::uint32_t l) {
  if (m < 2 || l < 1) throw std::invalid_argument("need m >= 2 and l >= 1");
  if (static_cast<std::uint64_t>(m) * l * l + 1 != q) {
    throw std::invalid_argument("q - 1 must equal m * l^2 (q=" + std::to_string(q) +
                                ", m=" + std::to_string(m) + ", l=" + std::to_string(l) + ")");
  }
  if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
}

ConstructionParams::ConstructionParams(std::uint32_t q, std::uint32_t m, std::uint32_t l,
                                       std::uint32_t alpha)
    : field_((check_cyclotomic_shape(q, m, l), q)),
      m_(m),
      l_(l),
      alpha_(field_.element(alpha)) {
  if (alpha == 0 || alpha >= q || !is_primitive(alpha_)) {
    throw std::invalid_argument(std::to_string(alpha) + " is not a primitive root mod " +
                                std::to_string(q));
  }
}

SetFamily cyclotomic_family(const ConstructionParams& params) {
  const std::uint32_t m = params.m();
  const std::uint32_t l = params.l();
  const FieldElement alpha = params.alpha();
  std::vector<Residue> base;
  base.reserve(l);
  for (std::uint32_t i = 0; i < l; ++i) {
    base.push_back(pow(alpha, static_cast<std::uint64_t>(i) * l * m).value());
  }
  std::vector<std::vector<Residue>> sets;
  sets.reserve(m);
  const FieldElement step = pow(alpha, l);
  FieldElement scale = params.field().one();
  for (std::uint32_t j = 0; j < m; ++j) {
    std::vector<Residue> set;
    set.reserve(l);
    for (Residue x : base) set.push_back((scale * params.field().element(x)).value());
    sets.push_back(std::move(set));
    scale = scale * step;
  }
  // SetFamily rejects overlapping classes.
  return SetFamily(params.q(), std::move(sets));
}

bool nonresidue_criterion(FieldElement alpha) {
  if (alpha.modulus() % 4 != 1) throw std::invalid_argument("criterion needs q = 1 mod 4");
  if (!is_primitive(alpha)) throw std::invalid_argument("criterion needs a primitive root");
  const FieldElement t = pow(alpha, 4) - alpha.one_like();
  if (t.is_zero()) throw std::domain_error("alpha^4 = 1");
  return !is_quadratic_residue(t);
}

bool coset_criterion(const ConstructionParams& params) {
  const std::uint32_t m = params.m();
  const std::uint32_t l = params.l();
  const FieldElement one = params.field().one();
  const FieldElement beta = pow(params.alpha(), l);
  // H = <beta> has order l m, so x is in H iff x^{l m} = 1.
  auto in_subgroup = [&](FieldElement x) {
    return pow(x, static_cast<std::uint64_t>(l) * m) == one;
  };
  std::vector<FieldElement> reps;
  reps.reserve(l);
  for (std::uint32_t i = 0; i < l; ++i) {
    const FieldElement r = pow(beta, static_cast<std::uint64_t>(i) * m + 1) - one;
    if (r.is_zero()) return false;
    reps.push_back(r);
  }
  for (std::uint32_t i = 0; i < l; ++i) {
    const FieldElement inv = invert(reps[i]);
    for (std::uint32_t j = i + 1; j < l; ++j) {
      if (in_subgroup(reps[j] * inv)) return false;
    }
  }
  return true;
}

SearchResult search_parameter_set(std::uint32_t q, std::uint32_t m, std::uint32_t l,
                                  unsigned threads) {
  check_cyclotomic_shape(q, m, l);
  const std::vector<FieldElement> roots = enumerate_primitive_roots(PrimeField(q));
  std::vector<char> ok(roots.size(), 0);
  std::vector<std::exception_ptr> errors(std::max(1U, threads));

  auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      ConstructionParams params(q, m, l, roots[i].value());
      const bool verified = verify_cedf(cyclotomic_family(params), 1).valid;
      if (verified != coset_criterion(params)) {
        throw std::logic_error("verifier and coset criterion disagree at alpha=" +
                               std::to_string(roots[i].value()));
      }
      ok[i] = verified;
    }
  };
  if (threads <= 1) {
    evaluate(0, roots.size());
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = roots.size() * w / threads;
      const std::size_t end = roots.size() * (w + 1) / threads;
      workers.emplace_back([&, w, begin, end] {
        try {
          evaluate(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SearchResult result{q, m, l, {}, roots.size()};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (ok[i]) result.witnesses.push_back(roots[i].value());
  }
  return result;
}

std::span<const TableRow> published_table() { return kPublishedTable; }

std::vector<SetFamily> search_sedf_permutations(std::uint32_t q, std::uint32_t m, std::uint32_t l,
                                                std::span<const std::uint32_t> shifts) {
  if (m > kMaxPermutationSearchM) {
    throw std::invalid_argument("m=" + std::to_string(m) +
                                " is too large for exhaustive ordering search; use the "
                                "randomized search");
  }
  const auto classes = cyclotomic_classes(q, m, l);
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0U);
  std::vector<SetFamily> found;
  do {
    std::vector<std::vector<Residue>> sets;
    sets.reserve(m);
    for (std::uint32_t idx : order) sets.push_back(classes[idx]);
    SetFamily family(q, std::move(sets));
    if (verify_sedf(family, shifts).valid) found.push_back(std::move(family));
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return found;
}

std::vector<SetFamily> search_sedf_random(std::uint32_t q, std::uint32_t m, std::uint32_t l,
                                          std::span<const std::uint32_t> shifts,
                                          std::uint64_t seed, std::uint64_t attempts) {
  const auto classes = cyclotomic_classes(q, m, l);
  SeededRandom rng(seed);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<SetFamily> found;
  std::vector<std::uint32_t> order(m);
  for (std::uint64_t a = 0; a < attempts; ++a) {
    std::iota(order.begin(), order.end(), 0U);
    for (std::uint32_t i = m - 1; i > 1; --i) {
      std::swap(order[i], order[1 + rng.below(i)]);
    }
    if (!seen.insert(order).second) continue;
    std::vector<std::vector<Residue>> sets;
    for (std::uint32_t idx : order) sets.push_back(classes[idx]);
    SetFamily family(q, std::move(sets));
    if (verify_sedf(family, shifts).valid) found.push_back(std::move(family));
  }
  return found;
}

// ---------------------------------------------------------------------------
// Strong family search

namespace {

class ScedfSearcher {
 public:
  ScedfSearcher(std::uint32_t n, std::uint32_t m, std::uint32_t l, std::uint32_t c,
                std::uint64_t lambda, std::uint64_t& nodes, std::uint64_t budget,
                ScedfGroupCertificate& cert, std::vector<SetFamily>& out)
      : n_(n), m_(m), l_(l), c_(c), lambda_(lambda), nodes_(nodes), budget_(budget),
        cert_(cert), out_(out), used_(n, false), counts_(n, 0), sets_(m) {
    cert_.levels.assign(m, ScedfLevel{});
  }

  /// False if the budget ran out.
  bool run() {
    used_[0] = true;
    std::vector<Residue> chosen{0};
    return choose(0, chosen, 1);
  }

 private:
  // Extends the set at `depth` with elements >= `from`.
  bool choose(std::uint32_t depth, std::vector<Residue>& chosen, Residue from) {
    if (chosen.size() == l_) return place(depth, chosen);
    for (Residue g = from; g < n_; ++g) {
      if (used_[g]) continue;
      used_[g] = true;
      chosen.push_back(g);
      const bool ok = choose(depth, chosen, g + 1);
      chosen.pop_back();
      used_[g] = false;
      if (!ok) return false;
    }
    return true;
  }

  bool place(std::uint32_t depth, const std::vector<Residue>& set) {
    if (++nodes_ > budget_) return false;
    ++cert_.levels[depth].generated;
    sets_[depth] = set;
    if (!pairs_ok(depth)) return true;
    ++cert_.levels[depth].passed;
    if (depth + 1 == m_) {
      ++cert_.found;
      out_.emplace_back(n_, sets_);
      return true;
    }
    std::vector<Residue> next;
    return choose(depth + 1, next, 0);
  }

  // Checks every pair (A_{j+c}, A_j) whose later index is `depth`.
  bool pairs_ok(std::uint32_t depth) {
    for (std::uint32_t j = 0; j <= depth; ++j) {
      const std::uint32_t k = (j + c_) % m_;
      if (k > depth || std::max(j, k) != depth) continue;
      std::fill(counts_.begin(), counts_.end(), 0);
      for (Residue x : sets_[k]) {
        for (Residue y : sets_[j]) {
          const Residue d = x >= y ? x - y : x + n_ - y;
          if (d == 0 || ++counts_[d] > lambda_) return false;
        }
      }
      // Totals match (l^2 = lambda (n-1)), so no count above lambda means
      // every count equals lambda.
    }
    return true;
  }

  std::uint32_t n_, m_, l_, c_;
  std::uint64_t lambda_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  ScedfGroupCertificate& cert_;
  std::vector<SetFamily>& out_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::vector<Residue>> sets_;
};

}  // namespace

ScedfSearchResult search_scedf(std::uint32_t n_max, std::uint32_t m, std::uint32_t l,
                               std::uint32_t c, std::uint64_t budget) {
  if (m < 2 || l < 1) throw std::invalid_argument("need m >= 2 and l >= 1");
  if (c < 1 || c >= m) throw std::invalid_argument("shift must lie in [1, m-1]");
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  ScedfSearchResult result;
  result.n_max = n_max;
  result.m = m;
  result.l = l;
  result.c = c;
  result.budget = budget;
  const std::uint64_t l2 = static_cast<std::uint64_t>(l) * l;
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    ScedfGroupCertificate cert;
    cert.n = n;
    if (l2 % (n - 1) != 0) {
      cert.status = "skipped:parameter-identity";
    } else if (static_cast<std::uint64_t>(m) * l > n) {
      cert.status = "skipped:too-few-elements";
      cert.lambda = l2 / (n - 1);
    } else {
      cert.lambda = l2 / (n - 1);
      ScedfSearcher searcher(n, m, l, c, cert.lambda, result.nodes, budget, cert,
                             result.families);
      if (searcher.run()) {
        cert.status = "searched";
      } else {
        cert.status = "budget-exhausted";
        result.complete = false;
        result.groups.push_back(std::move(cert));
        break;
      }
    }
    result.groups.push_back(std::move(cert));
  }
  return result;
}

std::string check_scedf_certificate(const ScedfSearchResult& r) {
  const std::uint64_t l2 = static_cast<std::uint64_t>(r.l) * r.l;
  std::uint64_t found = 0;
  std::uint64_t nodes = 0;
  std::uint32_t expected_n = 2;
  for (const auto& g : r.groups) {
    const std::string where = "n=" + std::to_string(g.n) + ": ";
    if (g.n != expected_n++) return where + "groups not contiguous from 2";
    const bool identity = l2 % (g.n - 1) == 0;
    if (g.status == "skipped:parameter-identity") {
      if (identity) return where + "skipped although (n-1) divides l^2";
      continue;
    }
    if (!identity) return where + "searched although (n-1) does not divide l^2";
    if (g.lambda * (g.n - 1) != l2) return where + "lambda does not satisfy lambda(n-1)=l^2";
    if (g.status == "skipped:too-few-elements") {
      if (static_cast<std::uint64_t>(r.m) * r.l <= g.n) return where + "wrongly skipped";
      continue;
    }
    if (g.levels.size() != r.m) return where + "wrong number of levels";
    const bool full = g.status == "searched";
    if (!full && g.status != "budget-exhausted") return where + "unknown status " + g.status;
    std::uint64_t expect = binomial(g.n - 1, r.l - 1);
    for (std::uint32_t d = 0; d < r.m; ++d) {
      const auto& lv = g.levels[d];
      if (full ? lv.generated != expect : lv.generated > expect) {
        return where + "level " + std::to_string(d) + " generated " +
               std::to_string(lv.generated) + ", expected " + std::to_string(expect);
      }
      if (lv.passed > lv.generated) return where + "more passed than generated";
      nodes += lv.generated;
      expect = lv.passed * binomial(g.n - (d + 1) * r.l, r.l);
    }
    if (g.levels.back().passed != g.found) return where + "found count mismatch";
    found += g.found;
  }
  if (r.complete && (r.groups.empty() || r.groups.back().n != r.n_max)) {
    return "complete search does not reach n_max";
  }
  if (nodes != r.nodes && r.complete) return "node total mismatch";
  if (found != r.families.size()) return "family count mismatch";
  for (const auto& f : r.families) {
    if (f.m() != r.m || f.set_size() != r.l) return "family has wrong shape";
    if (!verify_scedf(f, r.c).valid) return "reported family fails verification";
    if (f.owner(0) != std::optional<std::uint32_t>(0)) return "family not canonical (0 in A_0)";
  }
  return {};
}

}  // namespace nmss
