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

#include "nmss/json_io.hpp"

#include <limits>
#include <string>

namespace nmss {
namespace {

std::uint32_t as_u32(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw FormatError(what + " must be an integer");
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > std::numeric_limits<std::uint32_t>::max()) throw FormatError(what + " too large");
    return static_cast<std::uint32_t>(u);
  }
  auto s = v.get<std::int64_t>();
  if (s < 0 || s > std::numeric_limits<std::uint32_t>::max()) {
    throw FormatError(what + " out of range");
  }
  return static_cast<std::uint32_t>(s);
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw FormatError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint32_t u32_field(const Json& obj, const char* key) { return as_u32(field(obj, key), key); }

template <typename Fn>
auto wrap_invalid(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

Json to_json(const SetFamily& family) {
  Json sets = Json::array();
  for (const auto& s : family.sets()) sets.push_back(s);
  return Json{{"n", family.n()}, {"sets", std::move(sets)}};
}

SetFamily family_from_json(const Json& j) {
  const std::uint32_t n = u32_field(j, "n");
  const Json& sets = field(j, "sets");
  if (!sets.is_array()) throw FormatError("\"sets\" must be an array");
  std::vector<std::vector<Residue>> out;
  for (const Json& s : sets) {
    if (!s.is_array()) throw FormatError("each set must be an array");
    std::vector<Residue> set;
    for (const Json& g : s) set.push_back(as_u32(g, "set element"));
    out.push_back(std::move(set));
  }
  return wrap_invalid([&] { return SetFamily(n, std::move(out)); });
}

Json to_json(const VerificationReport& report) {
  Json j{{"valid", report.valid}, {"lambda", report.valid ? Json(report.lambda) : Json(nullptr)}};
  if (report.violation) {
    Json v{{"element", report.violation->element},
           {"observed", report.violation->observed},
           {"expected", report.violation->expected}};
    if (report.violation->pair_index) v["pair_index"] = *report.violation->pair_index;
    j["violation"] = std::move(v);
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

Json to_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json to_json(const AdvantageReport& report) {
  Json j{{"game", to_string(report.game)}};
  if (report.shift != 0) j["c"] = report.shift;
  j["epsilon"] = to_json(report.epsilon);
  j["best_deltas"] = report.best_deltas;
  return j;
}

Json to_json(const ShareVector& shares) {
  Json list = Json::array();
  for (const Share& s : shares.shares) list.push_back(Json{{"x", s.x.value()}, {"y", s.y.value()}});
  return Json{{"p", shares.params.field().modulus()},
              {"k", shares.params.k()},
              {"n", shares.params.n()},
              {"shares", std::move(list)}};
}

ShareVector shares_from_json(const Json& j) {
  const std::uint32_t p = u32_field(j, "p");
  const std::uint32_t k = u32_field(j, "k");
  const std::uint32_t n = u32_field(j, "n");
  ThresholdParams params = wrap_invalid([&] { return ThresholdParams(k, n, PrimeField(p)); });
  const Json& list = field(j, "shares");
  if (!list.is_array()) throw FormatError("\"shares\" must be an array");
  std::vector<Share> shares;
  for (const Json& s : list) {
    const std::uint32_t x = u32_field(s, "x");
    const std::uint32_t y = u32_field(s, "y");
    if (x == 0 || x >= p || y >= p) throw FormatError("share coordinates outside Z_p");
    shares.push_back(Share{params.field().element(x), params.field().element(y)});
  }
  return ShareVector{std::move(params), std::move(shares)};
}

Json to_json(const SearchResult& result) {
  return Json{{"q", result.q},
              {"m", result.m},
              {"l", result.l},
              {"witnesses", result.witnesses},
              {"examined", result.examined}};
}

Json to_json(const ScedfSearchResult& result) {
  Json groups = Json::array();
  for (const auto& g : result.groups) {
    Json levels = Json::array();
    for (const auto& lv : g.levels) {
      levels.push_back(Json{{"generated", lv.generated}, {"passed", lv.passed}});
    }
    groups.push_back(Json{{"n", g.n},
                          {"status", g.status},
                          {"lambda", g.lambda},
                          {"levels", std::move(levels)},
                          {"found", g.found}});
  }
  Json families = Json::array();
  for (const auto& f : result.families) families.push_back(to_json(f));
  return Json{{"n_max", result.n_max},   {"m", result.m},
              {"l", result.l},           {"c", result.c},
              {"budget", result.budget}, {"nodes", result.nodes},
              {"complete", result.complete}, {"groups", std::move(groups)},
              {"families", std::move(families)}};
}

Json to_json(const GameTranscript& t) {
  return Json{{"true_secret", t.true_secret},
              {"reconstructed", t.reconstructed ? Json(*t.reconstructed) : Json(nullptr)},
              {"detected", t.detected()},
              {"win", t.win},
              {"seed", t.seed}};
}

SharingScheme scheme_from_json(const Json& j) {
  const std::uint32_t k = u32_field(j, "k");
  const std::uint32_t n = u32_field(j, "n");
  if (j.contains("family")) {
    SetFamily family = family_from_json(j["family"]);
    return wrap_invalid([&] {
      ThresholdParams params(k, n, PrimeField(family.n()));
      return SharingScheme::composed(ComposedScheme(AmdCode(std::move(family)), std::move(params)));
    });
  }
  const std::uint32_t p = u32_field(j, "p");
  return wrap_invalid([&] { return SharingScheme::plain(ThresholdParams(k, n, PrimeField(p))); });
}

}  // namespace nmss
