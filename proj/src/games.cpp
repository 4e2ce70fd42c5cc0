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

#include "nmss/games.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace nmss {

// ---------------------------------------------------------------------------
// SharingScheme

SharingScheme SharingScheme::plain(ThresholdParams params) {
  return SharingScheme(std::move(params));
}

SharingScheme SharingScheme::composed(ComposedScheme scheme) {
  return SharingScheme(std::move(scheme));
}

const ThresholdParams& SharingScheme::threshold() const noexcept {
  if (auto* c = composed_scheme()) return c->threshold();
  return std::get<ThresholdParams>(impl_);
}

std::uint32_t SharingScheme::secret_count() const noexcept {
  if (auto* c = composed_scheme()) return c->secret_space_size();
  return threshold().field().modulus();
}

std::uint32_t SharingScheme::encodings_per_secret() const noexcept {
  if (auto* c = composed_scheme()) return c->code().family().set_size();
  return 1;
}

Residue SharingScheme::encoding(std::uint32_t secret, std::uint32_t index) const {
  if (secret >= secret_count() || index >= encodings_per_secret()) {
    throw std::out_of_range("encoding index out of range");
  }
  if (auto* c = composed_scheme()) return c->code().family().set(secret)[index];
  return secret;
}

std::optional<std::uint32_t> SharingScheme::decode(Residue encoded) const noexcept {
  if (auto* c = composed_scheme()) return c->code().decode(encoded);
  return encoded;
}

TracedSharing SharingScheme::share(std::uint32_t secret, RandomSource& rng) const {
  if (auto* c = composed_scheme()) return share_secret_traced(*c, secret, rng);
  if (secret >= secret_count()) throw std::out_of_range("secret outside Z_p");
  FieldElement s = threshold().field().element(secret);
  return TracedSharing{s, deal(threshold(), s, rng)};
}

std::optional<std::uint32_t> SharingScheme::recover(std::span<const Share> shares) const {
  if (auto* c = composed_scheme()) return recover_secret(*c, shares).secret;
  return reconstruct(threshold(), shares).value();
}

std::string SharingScheme::describe() const {
  const ThresholdParams& th = threshold();
  std::string tail = ",k=" + std::to_string(th.k()) + ",n=" + std::to_string(th.n()) + ")";
  if (auto* c = composed_scheme()) {
    const SetFamily& f = c->code().family();
    return "composed(p=" + std::to_string(f.n()) + ",m=" + std::to_string(f.m()) +
           ",l=" + std::to_string(f.set_size()) + tail;
  }
  return "plain-shamir(p=" + std::to_string(th.field().modulus()) + tail;
}

// ---------------------------------------------------------------------------
// Relation

Relation Relation::not_equal() { return Relation(); }

Relation Relation::additive_shift(std::uint32_t c, std::uint32_t m) {
  if (c == 0 || c >= m) {
    throw std::invalid_argument("additive relation needs 0 < c < m (c=" + std::to_string(c) +
                                ", m=" + std::to_string(m) + ")");
  }
  Relation r;
  r.kind_ = Kind::kAdditiveShift;
  r.domain_ = m;
  r.shifts_ = {c};
  return r;
}

Relation Relation::shift_set(std::vector<std::uint32_t> shifts, std::uint32_t m) {
  if (shifts.empty()) throw std::invalid_argument("empty shift set");
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
  for (std::uint32_t c : shifts) {
    if (c == 0 || c >= m) throw std::invalid_argument("shift outside (0, m)");
  }
  Relation r;
  r.kind_ = Kind::kShiftSet;
  r.domain_ = m;
  r.shifts_ = std::move(shifts);
  return r;
}

Relation Relation::custom(std::function<bool(std::uint32_t, std::uint32_t)> predicate,
                          std::uint32_t domain, std::string name) {
  if (!predicate || domain == 0) throw std::invalid_argument("custom relation needs a predicate");
  auto reflexive_at = [&](std::uint32_t s) {
    if (predicate(s, s)) {
      throw std::invalid_argument("relation '" + name + "' is reflexive at " + std::to_string(s));
    }
  };
  if (domain <= (1U << 16)) {
    for (std::uint32_t s = 0; s < domain; ++s) reflexive_at(s);
  } else {
    SeededRandom rng(domain);
    for (int i = 0; i < 4096; ++i) reflexive_at(static_cast<std::uint32_t>(rng.below(domain)));
  }
  Relation r;
  r.kind_ = Kind::kCustom;
  r.domain_ = domain;
  r.predicate_ = std::move(predicate);
  r.name_ = std::move(name);
  return r;
}

bool Relation::holds(std::uint32_t s_prime, std::uint32_t s) const {
  switch (kind_) {
    case Kind::kNotEqual: return s_prime != s;
    case Kind::kAdditiveShift:
    case Kind::kShiftSet: {
      const std::uint32_t m = *domain_;
      if (s_prime >= m || s >= m) return false;
      const std::uint32_t d = s_prime >= s ? s_prime - s : s_prime + m - s;
      return std::binary_search(shifts_.begin(), shifts_.end(), d);
    }
    case Kind::kCustom: return predicate_(s_prime, s);
  }
  return false;
}

std::string Relation::describe() const {
  switch (kind_) {
    case Kind::kNotEqual: return "neq";
    case Kind::kAdditiveShift: return "shift:" + std::to_string(shifts_.front());
    case Kind::kShiftSet: {
      std::string out = "set:";
      for (std::size_t i = 0; i < shifts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(shifts_[i]);
      }
      return out;
    }
    case Kind::kCustom: return name_;
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Adversaries

Adversary::Adversary(std::string name, TamperFn tamper, NominateFn nominate)
    : name_(std::move(name)), tamper_(std::move(tamper)), nominate_(std::move(nominate)) {
  if (!tamper_) throw std::invalid_argument("adversary needs a tamper strategy");
}

std::vector<std::uint32_t> Adversary::nominate(const ThresholdParams& params,
                                               std::span<const std::uint32_t> controlled_ids) const {
  if (nominate_) return nominate_(params, controlled_ids);
  return default_nomination(params, controlled_ids);
}

std::vector<std::uint32_t> default_nomination(const ThresholdParams& params,
                                              std::span<const std::uint32_t> controlled_ids) {
  std::vector<std::uint32_t> good;
  const std::size_t need = params.k() - controlled_ids.size();
  for (std::uint32_t id = 1; id <= params.n() && good.size() < need; ++id) {
    if (std::find(controlled_ids.begin(), controlled_ids.end(), id) == controlled_ids.end()) {
      good.push_back(id);
    }
  }
  return good;
}

Adversary shamir_offset_attack(FieldElement delta) {
  if (delta.is_zero()) throw std::invalid_argument("offset attack needs a nonzero delta");
  return Adversary("shamir-offset", [delta](const AdversaryView& view) {
    std::vector<FieldElement> ys;
    for (const Share& s : view.controlled) ys.push_back(s.y);
    ys.front() = ys.front() + delta;
    return ys;
  });
}

Adversary encoded_offset_attack(std::uint32_t offset) {
  if (offset == 0) throw std::invalid_argument("offset must be nonzero");
  return Adversary("encoded-offset:" + std::to_string(offset), [offset](const AdversaryView& view) {
    const FieldElement b1 = view.lagrange.front();
    if (offset >= b1.modulus()) throw std::invalid_argument("offset must be below p");
    const FieldElement target = b1.with_value(offset);
    std::vector<FieldElement> ys;
    for (const Share& s : view.controlled) ys.push_back(s.y);
    ys.front() = ys.front() + target * invert(b1);
    return ys;
  });
}

Adversary additive_relation_attack(std::uint32_t c) {
  if (c == 0) throw std::invalid_argument("the relation s' = s + 0 is reflexive");
  Adversary inner = encoded_offset_attack(c);
  return Adversary("additive-relation:" + std::to_string(c),
                   [inner](const AdversaryView& view) { return inner.tamper(view); });
}

Adversary multi_share_offset_attack(std::vector<std::uint32_t> deltas) {
  return Adversary("multi-share-offset", [deltas](const AdversaryView& view) {
    if (deltas.size() != view.controlled.size()) {
      throw std::invalid_argument("one offset per controlled share expected");
    }
    std::vector<FieldElement> ys;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      const FieldElement y = view.controlled[i].y;
      ys.push_back(y + y.with_value(deltas[i]));
    }
    return ys;
  });
}

Adversary replay_adversary() {
  return Adversary("replay", [](const AdversaryView& view) {
    std::vector<FieldElement> ys;
    for (const Share& s : view.controlled) ys.push_back(s.y);
    return ys;
  });
}

// ---------------------------------------------------------------------------
// Games

namespace {

void check_t(const SharingScheme& scheme, std::uint32_t t) {
  if (t < 1 || t >= scheme.threshold().k()) {
    throw std::invalid_argument("need 1 <= t < k, got t=" + std::to_string(t));
  }
}

void check_relation(const SharingScheme& scheme, const Relation& relation) {
  if (relation.domain() && *relation.domain() != scheme.secret_count()) {
    throw std::invalid_argument("relation " + relation.describe() + " is over " +
                                std::to_string(*relation.domain()) + " secrets, scheme has " +
                                std::to_string(scheme.secret_count()));
  }
}

void check_weights(const SharingScheme& scheme, const SecretWeights& weights) {
  if (weights.empty()) return;
  if (weights.size() != scheme.secret_count()) {
    throw std::invalid_argument("one weight per secret expected");
  }
  if (std::accumulate(weights.begin(), weights.end(), std::uint64_t{0}) == 0) {
    throw std::invalid_argument("weights must not all be zero");
  }
}

std::uint32_t sample_secret(const SharingScheme& scheme, const SecretWeights& weights,
                            RandomSource& rng) {
  if (weights.empty()) return static_cast<std::uint32_t>(rng.below(scheme.secret_count()));
  std::uint64_t r = rng.below(std::accumulate(weights.begin(), weights.end(), std::uint64_t{0}));
  for (std::uint32_t s = 0; s < weights.size(); ++s) {
    if (r < weights[s]) return s;
    r -= weights[s];
  }
  return static_cast<std::uint32_t>(weights.size() - 1);
}

template <typename WinPredicate>
GameTranscript play(const SharingScheme& scheme, const Adversary& adversary, std::uint32_t t,
                    std::uint64_t seed, const SecretWeights& weights, WinPredicate wins) {
  check_t(scheme, t);
  check_weights(scheme, weights);
  const ThresholdParams& params = scheme.threshold();
  SeededRandom rng(seed);

  const std::uint32_t secret = sample_secret(scheme, weights, rng);
  const std::vector<Share> all = scheme.share(secret, rng).dealing.shares.shares;

  std::vector<std::uint32_t> controlled_ids(t);
  std::iota(controlled_ids.begin(), controlled_ids.end(), 1U);
  const std::vector<std::uint32_t> good_ids = adversary.nominate(params, controlled_ids);
  if (good_ids.size() != params.k() - t) {
    throw std::invalid_argument("adversary must nominate exactly k - t good shares");
  }
  std::vector<std::uint32_t> ids = controlled_ids;
  for (std::uint32_t id : good_ids) {
    if (id < 1 || id > params.n() || std::find(ids.begin(), ids.end(), id) != ids.end()) {
      throw std::invalid_argument("invalid good-share nomination " + std::to_string(id));
    }
    ids.push_back(id);
  }

  std::vector<Share> controlled(all.begin(), all.begin() + t);
  std::vector<FieldElement> xs;
  for (std::uint32_t id : ids) xs.push_back(all[id - 1].x);
  const std::vector<FieldElement> lagrange = lagrange_coefficients(xs);

  const std::vector<FieldElement> bad =
      adversary.tamper(AdversaryView{controlled, xs, lagrange});
  if (bad.size() != t) throw std::invalid_argument("adversary must return t ordinates");

  std::vector<Share> used;
  for (std::uint32_t i = 0; i < t; ++i) used.push_back(Share{controlled[i].x, bad[i]});
  for (std::uint32_t id : good_ids) used.push_back(all[id - 1]);

  GameTranscript out;
  out.true_secret = secret;
  out.reconstructed = scheme.recover(used);
  out.win = out.reconstructed && wins(*out.reconstructed, secret);
  out.seed = seed;
  return out;
}

}  // namespace

GameTranscript play_robustness(const SharingScheme& scheme, const Adversary& adversary,
                               std::uint32_t t, std::uint64_t seed, const SecretWeights& weights) {
  return play(scheme, adversary, t, seed, weights,
              [](std::uint32_t s_prime, std::uint32_t s) { return s_prime != s; });
}

GameTranscript play_malleability(const SharingScheme& scheme, const Relation& relation,
                                 const Adversary& adversary, std::uint32_t t, std::uint64_t seed,
                                 const SecretWeights& weights) {
  check_relation(scheme, relation);
  return play(scheme, adversary, t, seed, weights,
              [&relation](std::uint32_t s_prime, std::uint32_t s) {
                return s_prime != s && relation.holds(s_prime, s);
              });
}

AdvantageReport exact_win_probability(const SharingScheme& scheme, const Relation& relation,
                                      std::uint32_t t, const SecretWeights& weights) {
  check_t(scheme, t);
  check_relation(scheme, relation);
  check_weights(scheme, weights);
  const std::uint32_t p = scheme.threshold().field().modulus();
  const std::uint32_t secrets = scheme.secret_count();
  const std::uint32_t per = scheme.encodings_per_secret();
  const std::uint64_t weight_total =
      weights.empty() ? secrets
                      : std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});

  std::uint64_t best = 0;
  std::vector<Residue> arg;
  for (Residue delta = 1; delta < p; ++delta) {
    std::uint64_t wins = 0;
    for (std::uint32_t s = 0; s < secrets; ++s) {
      const std::uint64_t w = weights.empty() ? 1 : weights[s];
      if (w == 0) continue;
      std::uint64_t hits = 0;
      for (std::uint32_t e = 0; e < per; ++e) {
        const Residue k = scheme.encoding(s, e);
        const Residue moved = k + delta >= p ? k + delta - p : k + delta;
        if (auto s_prime = scheme.decode(moved);
            s_prime && *s_prime != s && relation.holds(*s_prime, s)) {
          ++hits;
        }
      }
      wins += w * hits;
    }
    if (wins > best) {
      best = wins;
      arg.clear();
    }
    if (wins == best) arg.push_back(delta);
  }
  return AdvantageReport{GameKind::kMalleability, 0, Rational(best, weight_total * per),
                         std::move(arg)};
}

Rational estimate_win_probability(const SharingScheme& scheme, const Relation& relation,
                                  const Adversary& adversary, std::uint32_t t,
                                  std::uint64_t trials, std::uint64_t seed, unsigned threads,
                                  const SecretWeights& weights) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  threads = std::max(1U, threads);
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t wins = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      if (play_malleability(scheme, relation, adversary, t, trial_seed(seed, i), weights).win) {
        ++wins;
      }
    }
    return wins;
  };
  if (threads == 1) return Rational(run_range(0, trials), trials);

  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = trials * w / threads;
      const std::uint64_t end = trials * (w + 1) / threads;
      workers.emplace_back([&, w, begin, end] {
        try {
          partial[w] = run_range(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return Rational(std::accumulate(partial.begin(), partial.end(), std::uint64_t{0}), trials);
}

}  // namespace nmss
