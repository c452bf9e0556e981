#pragma once

// JSON encodings.
//
//   IntegerSet      [0,2,3,4,7,11,12,14]
//   ChainRecord     {"method", "no_fill_in_required", "density_limit", "config",
//                    "steps": [{index, elements, sums, diffs, classification,
//                               card, diam, density, card_ratio, diam_ratio, params}]}
//   SearchReport    flat object, witnesses in canonical text form
//   construction    {"theorem": "<construction>", ...parameters}

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sumdiff/chains.hpp"
#include "sumdiff/constructions.hpp"
#include "sumdiff/integer_set.hpp"
#include "sumdiff/profile.hpp"
#include "sumdiff/search.hpp"

namespace sumdiff {

using json = nlohmann::json;

inline void to_json(json& j, const IntegerSet& a) { j = a.vector(); }

inline void from_json(const json& j, IntegerSet& a) {
  if (!j.is_array()) throw precondition_error("set is a JSON array");
  a = IntegerSet::from_sorted(j.get<std::vector<std::int64_t>>());
}

inline json ratio_json(const std::optional<Ratio>& r) {
  if (!r) return nullptr;
  return r->value();
}

inline void to_json(json& j, const SetProfile& p) {
  j = json{{"card", p.cardinality},
           {"diam", p.diameter},
           {"sums", p.sum_count},
           {"diffs", p.diff_count},
           {"classification", std::string(to_string(p.classification))},
           {"density", ratio_json(p.density)}};
}

// ---------------------------------------------------------------------------
// Chains.

inline json config_json(const MethodConfig& c) {
  json j{{"method", std::string(method_tag(c.method))}};
  switch (c.method) {
    case Method::fill1:
      j["seed"] = c.seed;
      j["p_rule"] = c.fill1.p_rule == PRule::minimize_n ? "minimize_n" : "smallest";
      j["k"] = c.fill1.k;
      break;
    case Method::fill2:
      j["L"] = c.left;
      j["R"] = c.right;
      j["n"] = c.n;
      break;
    case Method::nonfill_explicit: break;
    case Method::nonfill_fringe:
      j["L"] = c.left;
      j["R"] = c.right;
      j["n"] = c.n;
      j["m"] = c.m;
      j["mode"] = std::string(to_string(c.mode));
      break;
  }
  return j;
}

inline MethodConfig config_from_json(const json& j) {
  MethodConfig c;
  c.method = method_from_tag(j.at("method").get<std::string>());
  if (j.contains("seed")) c.seed = j.at("seed").get<IntegerSet>();
  if (j.contains("L")) c.left = j.at("L").get<IntegerSet>();
  if (j.contains("R")) c.right = j.at("R").get<IntegerSet>();
  c.n = j.value("n", std::int64_t{0});
  c.m = j.value("m", std::int64_t{0});
  if (j.contains("mode")) c.mode = condition_mode_from_string(j.at("mode").get<std::string>());
  if (j.contains("p_rule")) {
    c.fill1.p_rule = j.at("p_rule").get<std::string>() == "smallest" ? PRule::smallest : PRule::minimize_n;
  }
  c.fill1.k = j.value("k", std::int64_t{2});
  return c;
}

inline json chain_to_json(const ChainRecord& c) {
  json steps = json::array();
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const ChainStep& s = c.steps[i];
    json params = json::object();
    for (const StepParam& p : s.params) params[p.name] = p.value;
    steps.push_back({{"index", i + 1},
                     {"elements", s.set},
                     {"sums", s.profile.sum_count},
                     {"diffs", s.profile.diff_count},
                     {"classification", std::string(to_string(s.profile.classification))},
                     {"card", s.profile.cardinality},
                     {"diam", s.profile.diameter},
                     {"density", ratio_json(s.profile.density)},
                     {"card_ratio", ratio_json(c.card_ratio(i))},
                     {"diam_ratio", ratio_json(c.diam_ratio(i))},
                     {"params", params}});
  }
  json limit = nullptr;
  if (c.density_limit) limit = json{{"num", c.density_limit->num}, {"den", c.density_limit->den}};
  return json{{"method", std::string(method_tag(c.method()))},
              {"no_fill_in_required", c.no_fill_in_required},
              {"density_limit", limit},
              {"config", config_json(c.config)},
              {"steps", steps}};
}

/// Accepts the object form above or a bare array of step objects. Profiles
/// are taken from the file as recorded; verify_chain re-derives them.
inline ChainRecord chain_from_json(const json& j) {
  ChainRecord c;
  const json* steps = &j;
  if (j.is_object()) {
    steps = &j.at("steps");
    if (j.contains("config")) {
      c.config = config_from_json(j.at("config"));
    } else if (j.contains("method")) {
      c.config.method = method_from_tag(j.at("method").get<std::string>());
    }
    c.no_fill_in_required = j.value("no_fill_in_required", false);
    if (j.contains("density_limit") && !j.at("density_limit").is_null()) {
      c.density_limit = Ratio{j.at("density_limit").at("num").get<std::int64_t>(),
                              j.at("density_limit").at("den").get<std::int64_t>()};
    }
  }
  if (!steps->is_array()) throw precondition_error("chain steps are a JSON array");
  for (const json& s : *steps) {
    ChainStep step;
    step.set = s.at("elements").get<IntegerSet>();
    SetProfile& p = step.profile;
    p.sum_count = s.at("sums").get<std::int64_t>();
    p.diff_count = s.at("diffs").get<std::int64_t>();
    p.cardinality = s.value("card", static_cast<std::int64_t>(step.set.size()));
    p.diameter = s.value("diam", step.set.diameter());
    p.classification = s.contains("classification")
                           ? classification_from_string(s.at("classification").get<std::string>())
                           : classify_counts(p.sum_count, p.diff_count);
    if (p.diameter > 0) p.density = Ratio{p.cardinality, p.diameter};
    if (s.contains("params")) {
      for (const auto& [k, v] : s.at("params").items()) step.params.push_back({k, v.get<std::int64_t>()});
    }
    c.steps.push_back(std::move(step));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Reports.

inline json verification_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const CheckOutcome& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  json routes = json::array();
  for (OracleRoute route : r.routes) routes.push_back(route == OracleRoute::pairs ? "pairs" : "runs");
  return json{{"passed", r.passed()}, {"checks", checks}, {"oracle_routes", routes}};
}

inline json search_to_json(const SearchReport& r) {
  auto texts = [](const std::vector<IntegerSet>& sets) {
    json out = json::array();
    for (const IntegerSet& s : sets) out.push_back(to_string(s));
    return out;
  };
  json rows = json::array();
  for (const DiameterRow& row : r.by_diameter) {
    rows.push_back({{"diameter", row.diameter},
                    {"total", row.total},
                    {"mstd", row.mstd},
                    {"mdts", row.mdts},
                    {"balanced", row.balanced}});
  }
  auto opt = [](const auto& v) -> json {
    if (v) return *v;
    return nullptr;
  };
  return json{{"kind", r.kind},
              {"domain", r.domain},
              {"total", r.total},
              {"mstd_count", r.mstd_count},
              {"mdts_count", r.mdts_count},
              {"balanced_count", r.balanced_count},
              {"by_diameter", rows},
              {"min_mstd_diameter", opt(r.min_mstd_diameter)},
              {"min_mstd_cardinality", opt(r.min_mstd_cardinality)},
              {"min_diameter_witnesses", texts(r.min_diameter_witnesses)},
              {"min_cardinality_witnesses", texts(r.min_cardinality_witnesses)},
              {"seed", opt(r.seed)},
              {"mstd_fraction", opt(r.mstd_fraction)},
              {"ci95_low", opt(r.ci_low)},
              {"ci95_high", opt(r.ci_high)}};
}

inline json seeds_to_json(const std::vector<SplitSeed>& seeds) {
  json out = json::array();
  for (const SplitSeed& s : seeds) out.push_back({{"L", to_string(s.left)}, {"R", to_string(s.right)}});
  return out;
}

// ---------------------------------------------------------------------------
// Construction parameter bundles.

struct IntervalMinusPointRequest {
  std::int64_t m = 0;
  std::int64_t r = 0;
};
struct IntervalPlusPointRequest {
  std::int64_t m = 0;
  std::int64_t p = 0;
};
struct NonfillRequest {
  std::int64_t l = 1;
  bool mdts = false;
};
struct FringeBaseRequest {
  IntegerSet left;
  IntegerSet right;
  std::int64_t n = 0;
  std::int64_t m = 0;
  ConditionMode mode = ConditionMode::strict;
};

using ConstructionRequest =
    std::variant<IntervalMinusPointRequest, SymmetricPlusPointParams, IntervalPlusPointRequest,
                 PaddedExtensionParams, NonfillRequest, FringeBaseRequest>;

namespace detail {

inline json ap_json(const MultiDimAP& ap) {
  return json{{"base", ap.base}, {"steps", ap.steps}, {"starts", ap.starts}, {"lengths", ap.lengths}};
}

inline MultiDimAP ap_from_json(const json& j) {
  if (j.is_number_integer()) return MultiDimAP::point(j.get<std::int64_t>());
  MultiDimAP ap;
  ap.base = j.at("base").get<std::int64_t>();
  ap.steps = j.value("steps", std::vector<std::int64_t>{});
  ap.starts = j.value("starts", std::vector<std::int64_t>{});
  ap.lengths = j.value("lengths", std::vector<std::int64_t>{});
  return ap;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace detail

inline json request_to_json(const ConstructionRequest& req) {
  return std::visit(
      detail::overloaded{
          [](const IntervalMinusPointRequest& r) {
            return json{{"theorem", "interval_minus_point"}, {"m", r.m}, {"r", r.r}};
          },
          [](const SymmetricPlusPointParams& r) {
            return json{{"theorem", "symmetric_plus_point"}, {"m", r.m}, {"B", r.b},
                        {"Lstar", detail::ap_json(r.lstar)}, {"k", r.k}};
          },
          [](const IntervalPlusPointRequest& r) {
            return json{{"theorem", "interval_plus_point"}, {"m", r.m}, {"p", r.p}};
          },
          [](const PaddedExtensionParams& r) {
            return json{{"theorem", "padded_extension"}, {"L", r.left}, {"R", r.right}, {"n", r.n},
                        {"k", r.k}, {"m", r.m}, {"M", r.middle}};
          },
          [](const NonfillRequest& r) {
            return json{{"theorem", r.mdts ? "nonfill_mdts" : "nonfill_mstd"}, {"l", r.l}};
          },
          [](const FringeBaseRequest& r) {
            return json{{"theorem", "fringe_base"}, {"L", r.left}, {"R", r.right}, {"n", r.n},
                        {"m", r.m}, {"mode", std::string(to_string(r.mode))}};
          }},
      req);
}

inline ConstructionRequest request_from_json(const json& j) {
  const std::string name = j.at("theorem").get<std::string>();
  auto i64 = [&](const char* key) { return j.at(key).get<std::int64_t>(); };
  if (name == "interval_minus_point") return IntervalMinusPointRequest{i64("m"), i64("r")};
  if (name == "symmetric_plus_point") {
    return SymmetricPlusPointParams{i64("m"), j.at("B").get<IntegerSet>(),
                                    detail::ap_from_json(j.at("Lstar")), j.value("k", std::int64_t{2})};
  }
  if (name == "interval_plus_point") return IntervalPlusPointRequest{i64("m"), i64("p")};
  if (name == "padded_extension") {
    return PaddedExtensionParams{j.at("L").get<IntegerSet>(), j.at("R").get<IntegerSet>(), i64("n"),
                                 i64("k"), i64("m"), j.value("M", IntegerSet{})};
  }
  if (name == "nonfill_mstd") return NonfillRequest{i64("l"), false};
  if (name == "nonfill_mdts") return NonfillRequest{i64("l"), true};
  if (name == "fringe_base") {
    return FringeBaseRequest{j.at("L").get<IntegerSet>(), j.at("R").get<IntegerSet>(), i64("n"), i64("m"),
                             condition_mode_from_string(j.value("mode", std::string("strict")))};
  }
  throw precondition_error("known construction", name);
}

inline IntegerSet build(const ConstructionRequest& req, Checks checks = kDefaultChecks) {
  return std::visit(
      detail::overloaded{
          [&](const IntervalMinusPointRequest& r) { return interval_minus_point(r.m, r.r, checks); },
          [&](const SymmetricPlusPointParams& r) { return symmetric_plus_point_mstd(r, checks).set; },
          [&](const IntervalPlusPointRequest& r) { return mdts_interval_plus_point(r.m, r.p, checks).set; },
          [&](const PaddedExtensionParams& r) { return padded_extension(r, checks); },
          [&](const NonfillRequest& r) {
            return r.mdts ? nonfill_explicit_mdts(r.l, checks) : nonfill_explicit_mstd(r.l, checks);
          },
          [&](const FringeBaseRequest& r) { return fringe_base(r.left, r.right, r.n, r.m, r.mode); }},
      req);
}

}  // namespace sumdiff
