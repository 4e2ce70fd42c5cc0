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

// JSON wire formats.
//
//   family       {"n": 13, "sets": [[1, 12], [4, 9], [3, 10]]}
//   shares       {"p": 13, "k": 2, "n": 3, "shares": [{"x": 1, "y": 8}, ...]}
//   scheme       {"p": 13, "k": 2, "n": 3}                          plain Shamir
//                {"family": {...family...}, "k": 2, "n": 3}         composed
//   advantage    {"game": "circular-weak", "c": 1,
//                 "epsilon": {"num": 1, "den": 6}, "best_deltas": [...]}
//
// Parsing errors throw FormatError.

#include <stdexcept>

#include <json.hpp>

#include "nmss/amd_codes.hpp"
#include "nmss/cyclotomic.hpp"
#include "nmss/diff_families.hpp"
#include "nmss/games.hpp"
#include "nmss/shamir.hpp"

namespace nmss {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const SetFamily& family);
SetFamily family_from_json(const Json& j);

Json to_json(const VerificationReport& report);
Json to_json(const Rational& r);
Json to_json(const AdvantageReport& report);
Json to_json(const ShareVector& shares);
ShareVector shares_from_json(const Json& j);
Json to_json(const SearchResult& result);
Json to_json(const ScedfSearchResult& result);
Json to_json(const GameTranscript& transcript);

SharingScheme scheme_from_json(const Json& j);

}  // namespace nmss
