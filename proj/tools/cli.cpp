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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "nmss/amd_codes.hpp"
#include "nmss/cyclotomic.hpp"
#include "nmss/diff_families.hpp"
#include "nmss/games.hpp"
#include "nmss/json_io.hpp"
#include "nmss/nm_schemes.hpp"
#include "nmss/random.hpp"
#include "nmss/shamir.hpp"

namespace nmss::cli {
namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file path, or inline JSON when the argument starts with '{'.
Json load_json(const std::string& source) {
  std::string text;
  if (!source.empty() && source.front() == '{') {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw FormatError("cannot open " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

struct SchemeArgs {
  std::string scheme_file;
  std::string family_file;
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;

  void attach(CLI::App* app) {
    app->add_option("--scheme", scheme_file, "scheme descriptor (file or inline JSON)");
    app->add_option("--family", family_file, "family for a composed scheme");
    app->add_option("--p", p, "prime for plain Shamir");
    app->add_option("--k", k, "threshold");
    app->add_option("--n", n, "number of participants");
  }

  bool given() const { return !scheme_file.empty() || !family_file.empty() || p != 0; }

  SharingScheme build() const {
    int sources = !scheme_file.empty() + !family_file.empty() + (p != 0);
    if (sources != 1) throw UsageError("give exactly one of --scheme, --family, --p");
    if (!scheme_file.empty()) return scheme_from_json(load_json(scheme_file));
    if (k == 0 || n == 0) throw UsageError("--k and --n are required");
    Json j{{"k", k}, {"n", n}};
    if (!family_file.empty()) {
      j["family"] = load_json(family_file);
    } else {
      j["p"] = p;
    }
    return scheme_from_json(j);
  }
};

Relation parse_relation(const std::string& text, std::uint32_t domain) {
  if (text == "neq") return Relation::not_equal();
  auto numbers = [&](const std::string& body) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        unsigned long v = std::stoul(item, &used);
        if (used != item.size() || v > UINT32_MAX) throw std::invalid_argument(item);
        out.push_back(static_cast<std::uint32_t>(v));
      } catch (const std::logic_error&) {
        throw UsageError("bad number in relation: " + item);
      }
    }
    return out;
  };
  if (text.rfind("shift:", 0) == 0) {
    auto v = numbers(text.substr(6));
    if (v.size() != 1) throw UsageError("shift:c takes one value");
    return Relation::additive_shift(v[0], domain);
  }
  if (text.rfind("set:", 0) == 0) return Relation::shift_set(numbers(text.substr(4)), domain);
  throw UsageError("relation must be neq, shift:c or set:a,b,...");
}

std::string pretty_table(const std::vector<Json>& rows) {
  std::ostringstream os;
  os << std::setw(6) << "p" << std::setw(5) << "m" << std::setw(4) << "l" << std::setw(7)
     << "alpha" << "  result\n";
  for (const Json& r : rows) {
    os << std::setw(6) << r["p"].get<std::uint32_t>() << std::setw(5)
       << r["m"].get<std::uint32_t>() << std::setw(4) << r["l"].get<std::uint32_t>()
       << std::setw(7) << r["alpha"].get<std::uint32_t>() << "  "
       << (r["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-malleable secret sharing toolkit"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "check a family against a difference property");
  std::string family_file;
  std::optional<std::uint32_t> cedf_c, scedf_c;
  std::vector<std::uint32_t> sedf_shifts;
  verify->add_option("family", family_file, "family JSON (file or inline)")->required();
  verify->add_option("--cedf", cedf_c, "c-circular external difference family");
  verify->add_option("--sedf", sedf_shifts, "S-external difference family, S as 1,2")
      ->delimiter(',');
  verify->add_option("--scedf", scedf_c, "c-circular strong family");

  // advantage
  auto* advantage = app.add_subcommand("advantage", "exact AMD adversary advantage");
  std::string game = "circular-weak";
  std::uint32_t adv_c = 1;
  advantage->add_option("family", family_file, "family JSON (file or inline)")->required();
  advantage->add_option("--game", game, "weak, strong, circular-weak or circular-strong");
  advantage->add_option("--c", adv_c, "shift for circular games");

  // construct / search / table1 / scedf-search
  std::uint32_t q = 0, m = 0, l = 0, alpha = 0;
  auto* construct = app.add_subcommand("construct", "build the cyclotomic family");
  construct->add_option("q", q)->required();
  construct->add_option("m", m)->required();
  construct->add_option("l", l)->required();
  construct->add_option("alpha", alpha)->required();

  auto* search = app.add_subcommand("search", "try every primitive root for (q, m, l)");
  std::vector<std::uint32_t> search_shifts;
  std::optional<std::uint64_t> random_attempts;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  search->add_option("q", q)->required();
  search->add_option("m", m)->required();
  search->add_option("l", l)->required();
  search->add_option("--sedf", search_shifts, "search class orderings for an S-EDF")
      ->delimiter(',');
  search->add_option("--random", random_attempts, "random orderings instead of exhaustive");
  search->add_option("--seed", seed);
  search->add_option("--threads", threads)->check(CLI::Range(1u, 256u));

  auto* table1 = app.add_subcommand("table1", "re-verify the built-in parameter table");
  bool pretty = false;
  table1->add_flag("--pretty", pretty, "human-readable table");

  auto* scedf = app.add_subcommand("scedf-search", "exhaustive circular strong family search");
  std::uint32_t n_max = 19, scedf_m = 2, scedf_l = 3, scedf_shift = 1;
  std::uint64_t budget = 50'000'000;
  scedf->add_option("--n-max", n_max);
  scedf->add_option("--m", scedf_m);
  scedf->add_option("--l", scedf_l);
  scedf->add_option("--c", scedf_shift);
  scedf->add_option("--budget", budget);

  // deal / recover / attack-demo
  SchemeArgs scheme_args;
  auto* deal_cmd = app.add_subcommand("deal", "share a secret");
  std::uint32_t secret = 0;
  scheme_args.attach(deal_cmd);
  deal_cmd->add_option("--secret", secret)->required();
  deal_cmd->add_option("--seed", seed)->required();

  auto* recover = app.add_subcommand("recover", "reconstruct from a share file");
  std::string shares_file;
  scheme_args.attach(recover);
  recover->add_option("shares", shares_file, "shares JSON (file or inline)")->required();

  auto* attack = app.add_subcommand("attack-demo", "exact and empirical tampering success");
  std::string relation_text = "neq";
  std::uint32_t t = 1;
  std::uint64_t trials = 1000;
  scheme_args.attach(attack);
  attack->add_option("--relation", relation_text, "neq, shift:c or set:a,b");
  attack->add_option("--t", t, "controlled shares");
  attack->add_option("--trials", trials);
  attack->add_option("--seed", seed)->required();
  attack->add_option("--threads", threads)->check(CLI::Range(1u, 256u));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (verify->parsed()) {
      int modes = cedf_c.has_value() + !sedf_shifts.empty() + scedf_c.has_value();
      if (modes != 1) throw UsageError("give exactly one of --cedf, --sedf, --scedf");
      SetFamily family = family_from_json(load_json(family_file));
      VerificationReport report = cedf_c    ? verify_cedf(family, *cedf_c)
                                  : scedf_c ? verify_scedf(family, *scedf_c)
                                            : verify_sedf(family, sedf_shifts);
      emit(out, to_json(report));
      return report.valid ? kOk : kInvalid;
    }

    if (advantage->parsed()) {
      AmdCode code(family_from_json(load_json(family_file)));
      AdvantageReport report = [&] {
        if (game == "weak") return weak_advantage(code);
        if (game == "strong") return strong_advantage(code);
        if (game == "circular-weak") return circular_weak_advantage(code, adv_c);
        if (game == "circular-strong") return circular_strong_advantage(code, adv_c);
        throw UsageError("unknown game " + game);
      }();
      Json j = to_json(report);
      if (game == "weak") j["r_optimal"] = is_r_optimal_weak(code);
      if (game == "circular-weak") j["r_optimal"] = is_r_optimal_circular(code, adv_c);
      emit(out, j);
      return kOk;
    }

    if (construct->parsed()) {
      emit(out, to_json(cyclotomic_family(ConstructionParams(q, m, l, alpha))));
      return kOk;
    }

    if (search->parsed()) {
      if (search_shifts.empty()) {
        if (random_attempts) throw UsageError("--random needs --sedf");
        SearchResult result = search_parameter_set(q, m, l, threads);
        emit(out, to_json(result));
        return result.witnesses.empty() ? kInvalid : kOk;
      }
      std::vector<SetFamily> found;
      if (random_attempts) {
        if (!seed) throw UsageError("--random needs --seed");
        found = search_sedf_random(q, m, l, search_shifts, *seed, *random_attempts);
      } else {
        found = search_sedf_permutations(q, m, l, search_shifts);
      }
      Json families = Json::array();
      for (const auto& f : found) families.push_back(to_json(f));
      Json j{{"q", q}, {"m", m}, {"l", l}, {"shifts", search_shifts}};
      if (random_attempts) {
        j["attempts"] = *random_attempts;
        j["seed"] = *seed;
      }
      j["families"] = std::move(families);
      emit(out, j);
      return found.empty() ? kInvalid : kOk;
    }

    if (table1->parsed()) {
      std::vector<Json> rows;
      std::size_t passed = 0;
      for (const TableRow& row : published_table()) {
        SetFamily family = cyclotomic_family(ConstructionParams(row.p, row.m, row.l, row.alpha));
        VerificationReport report = verify_cedf(family, 1);
        bool ok = report.valid && report.lambda == 1;
        passed += ok;
        rows.push_back(Json{{"p", row.p}, {"m", row.m}, {"l", row.l}, {"alpha", row.alpha},
                            {"pass", ok}});
      }
      if (pretty) {
        out << pretty_table(rows) << passed << "/" << rows.size() << " pass\n";
      } else {
        for (const Json& r : rows) emit(out, r);
        emit(out, Json{{"passed", passed}, {"total", rows.size()}});
      }
      return passed == rows.size() ? kOk : kInvalid;
    }

    if (scedf->parsed()) {
      ScedfSearchResult result = search_scedf(n_max, scedf_m, scedf_l, scedf_shift, budget);
      std::string problem = check_scedf_certificate(result);
      Json j = to_json(result);
      j["certificate_consistent"] = problem.empty();
      if (!problem.empty()) j["certificate_problem"] = problem;
      emit(out, j);
      return problem.empty() ? kOk : kInvalid;
    }

    if (deal_cmd->parsed()) {
      SharingScheme scheme = scheme_args.build();
      SeededRandom rng(*seed);
      TracedSharing traced = scheme.share(secret, rng);
      emit(out, to_json(traced.dealing.shares));
      return kOk;
    }

    if (recover->parsed()) {
      ShareVector shares = shares_from_json(load_json(shares_file));
      SharingScheme scheme =
          scheme_args.given() ? scheme_args.build() : SharingScheme::plain(shares.params);
      if (scheme.threshold().field() != shares.params.field()) {
        throw FormatError("share file and scheme use different fields");
      }
      std::optional<std::uint32_t> s = scheme.recover(shares.shares);
      emit(out, Json{{"secret", s ? Json(*s) : Json(nullptr)}, {"detected", !s}});
      return s ? kOk : kInvalid;
    }

    if (attack->parsed()) {
      SharingScheme scheme = scheme_args.build();
      Relation relation = parse_relation(relation_text, scheme.secret_count());
      AdvantageReport exact = exact_win_probability(scheme, relation, t);
      Json j{{"game", relation.kind() == Relation::Kind::kNotEqual ? "robustness" : "malleability"},
             {"scheme", scheme.describe()},
             {"relation", relation.describe()},
             {"t", t},
             {"exact", to_json(exact.epsilon)}};
      // The empirical run replays the first optimal offset.
      if (!exact.best_deltas.empty()) {
        Rational empirical = estimate_win_probability(
            scheme, relation, encoded_offset_attack(exact.best_deltas.front()), t, trials, *seed,
            threads);
        j["empirical"] = to_json(empirical);
      } else {
        j["empirical"] = nullptr;
      }
      j["trials"] = trials;
      j["seed"] = *seed;
      j["best_deltas"] = exact.best_deltas;
      emit(out, j);
      return kOk;
    }
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace nmss::cli
