#pragma once

// Nested chains A_1 < A_2 < ... alternating between MSTD and MDTS.
//
// Each method is a lazy generator: next() produces the following step, so
// the "infinite" chain is the generator plus however many steps are taken.
// take() collects a finite prefix into an immutable ChainRecord.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumdiff/constructions.hpp"
#include "sumdiff/errors.hpp"
#include "sumdiff/integer_set.hpp"
#include "sumdiff/profile.hpp"
#include "sumdiff/search.hpp"

namespace sumdiff {

enum class Method { fill1, fill2, nonfill_explicit, nonfill_fringe };

constexpr std::string_view method_tag(Method m) noexcept {
  switch (m) {
    case Method::fill1: return "FILL1";
    case Method::fill2: return "FILL2";
    case Method::nonfill_explicit: return "NONFILL_EXPLICIT";
    case Method::nonfill_fringe: return "NONFILL_FRINGE";
  }
  return "FILL1";
}

inline Method method_from_tag(std::string_view tag) {
  for (Method m : {Method::fill1, Method::fill2, Method::nonfill_explicit, Method::nonfill_fringe}) {
    if (tag == method_tag(m)) return m;
  }
  throw precondition_error("known method tag", std::string(tag));
}

/// How FILL1 picks p for the MDTS step [0, m] u {p}.
enum class PRule {
  minimize_n,  // p > m+1 giving the smallest next n, ties to the smaller p
  smallest,    // p = m + 2
};

struct Fill1Options {
  PRule p_rule = PRule::minimize_n;
  std::int64_t k = 2;
};

struct MethodConfig {
  Method method = Method::nonfill_explicit;
  IntegerSet seed;          // FILL1
  IntegerSet left;          // FILL2, NONFILL_FRINGE
  IntegerSet right;         // FILL2, NONFILL_FRINGE
  std::int64_t n = 0;       // FILL2, NONFILL_FRINGE
  std::int64_t m = 0;       // NONFILL_FRINGE
  ConditionMode mode = ConditionMode::strict;  // NONFILL_FRINGE
  Fill1Options fill1;

  friend bool operator==(const MethodConfig& a, const MethodConfig& b) {
    return a.method == b.method && a.seed == b.seed && a.left == b.left && a.right == b.right &&
           a.n == b.n && a.m == b.m && a.mode == b.mode && a.fill1.p_rule == b.fill1.p_rule &&
           a.fill1.k == b.fill1.k;
  }
};

struct StepParam {
  std::string name;
  std::int64_t value;
  friend bool operator==(const StepParam&, const StepParam&) = default;
};

struct ChainStep {
  IntegerSet set;
  SetProfile profile;
  std::vector<StepParam> params;
};

struct ChainRecord {
  MethodConfig config;
  std::vector<ChainStep> steps;
  bool no_fill_in_required = false;
  std::optional<Ratio> density_limit;  // analytic limit of the MSTD-step densities

  [[nodiscard]] Method method() const noexcept { return config.method; }
  [[nodiscard]] std::size_t size() const noexcept { return steps.size(); }

  /// |A_i| / |A_{i-1}| (0-based i); none for the first step.
  [[nodiscard]] std::optional<Ratio> card_ratio(std::size_t i) const {
    if (i == 0 || i >= steps.size() || steps[i - 1].profile.cardinality == 0) return std::nullopt;
    return Ratio{steps[i].profile.cardinality, steps[i - 1].profile.cardinality};
  }

  /// D(A_i) / D(A_{i-1}); none for the first step or a zero predecessor.
  [[nodiscard]] std::optional<Ratio> diam_ratio(std::size_t i) const {
    if (i == 0 || i >= steps.size() || steps[i - 1].profile.diameter == 0) return std::nullopt;
    return Ratio{steps[i].profile.diameter, steps[i - 1].profile.diameter};
  }
};

namespace detail {

inline ChainStep make_step(IntegerSet set, std::vector<StepParam> params) {
  SetProfile p = profile(set);
  return {std::move(set), p, std::move(params)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FILL1: fill in to [0, m] u {p}, then wrap in a symmetric set plus a point.

class Fill1Generator {
 public:
  explicit Fill1Generator(const IntegerSet& seed, Fill1Options options = {},
                          Checks checks = kDefaultChecks)
      : options_(options), checks_(checks) {
    if (seed.empty()) throw precondition_error("seed is nonempty");
    if (classify(seed) != Classification::mstd) throw precondition_error("seed is MSTD");
    if (options.k < 2) throw precondition_error("k >= 2");
    config_.method = Method::fill1;
    config_.seed = seed;
    config_.fill1 = options;
    shift_ = detail::checked_sub(0, seed.min());
    current_ = translate(seed, shift_);
  }

  [[nodiscard]] const MethodConfig& config() const noexcept { return config_; }
  [[nodiscard]] bool no_fill_in() const noexcept { return false; }
  [[nodiscard]] std::optional<Ratio> density_limit() const { return Ratio{2, options_.k + 1}; }

  ChainStep next() {
    ++index_;
    if (index_ == 1) return detail::make_step(current_, {{"shift", shift_}});
    const std::int64_t m = current_.max();
    if (index_ % 2 == 0) {
      p_ = choose_p(m);
      IntervalPlusPoint step = mdts_interval_plus_point(m, p_, checks_);
      current_ = std::move(step.set);
      return detail::make_step(current_, {{"m", m}, {"p", p_}, {"surplus", step.surplus}});
    }
    const std::int64_t n = next_n(p_);
    const std::int64_t r = n - 3;
    SymmetricPlusPointParams params{n, interval_minus_point(n, r, checks_), MultiDimAP::point(r),
                                    options_.k};
    SymmetricPlusPoint step = symmetric_plus_point_mstd(params, checks_);
    current_ = std::move(step.set);
    return detail::make_step(current_, {{"n", n}, {"r", r}, {"k", options_.k}, {"a_star", step.a_star}});
  }

  /// n = p+5 for even p, p+2 for odd p; always odd.
  static std::int64_t next_n(std::int64_t p) {
    return detail::checked_add(p, p % 2 == 0 ? 5 : 2);
  }

 private:
  std::int64_t choose_p(std::int64_t m) const {
    const std::int64_t first = detail::checked_add(m, 2);
    if (options_.p_rule == PRule::smallest) return first;
    // next_n is increasing within each parity, so only m+2 and m+3 compete.
    const std::int64_t second = detail::checked_add(m, 3);
    return next_n(second) < next_n(first) ? second : first;
  }

  MethodConfig config_;
  Fill1Options options_;
  Checks checks_;
  std::int64_t shift_ = 0;
  IntegerSet current_;
  std::int64_t p_ = 0;
  std::size_t index_ = 0;
};

// ---------------------------------------------------------------------------
// FILL2: grow a P_n MSTD seed L u R outward by n per step.

/// Throws precondition_error naming the failed clause.
inline void validate_fill2_seed(const IntegerSet& left, const IntegerSet& right, std::int64_t n) {
  using detail::require;
  require(n >= 1, "n >= 1");
  require(!left.empty() && detail::within(left, 1, n), "L subset of [1, n]");
  require(!right.empty() && detail::within(right, n + 1, 2 * n), "R subset of [n+1, 2n]");
  const IntegerSet a = set_union(left, right);
  require(a.contains(1), "1 in A");
  require(a.contains(2 * n), "2n in A");
  require(!a.contains(n), "n not in A");
  require(is_pn(a, n), "A is P_n");
  require(classify(a) == Classification::mstd, "A is MSTD");
}

class Fill2Generator {
 public:
  Fill2Generator(const IntegerSet& left, const IntegerSet& right, std::int64_t n,
                 Checks checks = kDefaultChecks)
      : checks_(checks) {
    validate_fill2_seed(left, right, n);
    config_.method = Method::fill2;
    config_.left = left;
    config_.right = right;
    config_.n = n;
  }

  [[nodiscard]] const MethodConfig& config() const noexcept { return config_; }
  [[nodiscard]] bool no_fill_in() const noexcept { return false; }
  [[nodiscard]] std::optional<Ratio> density_limit() const { return Ratio{1, 1}; }

  ChainStep next() {
    ++index_;
    const std::int64_t n = config_.n;
    if (index_ == 1) return detail::make_step(set_union(config_.left, config_.right), {});
    using detail::checked_mul;
    const auto l = static_cast<std::int64_t>(index_ / 2);
    const IntegerSet middle = without_element(
        IntegerSet::interval(checked_mul(1 - l, n), checked_mul(l + 1, n)), n);
    IntegerSet out;
    if (index_ % 2 == 0) {
      out = with_element(middle, checked_mul(l + 2, n));
    } else {
      const std::int64_t shift = checked_mul(l, n);
      out = set_union(set_union(translate(config_.left, -shift - 1), middle),
                      translate(config_.right, shift));
    }
    if (checks_ == Checks::on && index_ >= 3 && previous_diameter_ != 0) {
      detail::ensure(checks_, out.diameter() - previous_diameter_ == n, "diameter grows by n");
    }
    previous_diameter_ = out.diameter();
    return detail::make_step(std::move(out), {{"l", l}});
  }

 private:
  MethodConfig config_;
  Checks checks_;
  std::size_t index_ = 0;
  std::int64_t previous_diameter_ = 0;
};

// ---------------------------------------------------------------------------
// Explicit non-filling chain.

class NonfillGenerator {
 public:
  explicit NonfillGenerator(Checks checks = kDefaultChecks) : checks_(checks) {
    config_.method = Method::nonfill_explicit;
  }

  [[nodiscard]] const MethodConfig& config() const noexcept { return config_; }
  [[nodiscard]] bool no_fill_in() const noexcept { return true; }
  [[nodiscard]] std::optional<Ratio> density_limit() const { return Ratio{1, 2}; }

  ChainStep next() {
    ++index_;
    const auto l = static_cast<std::int64_t>((index_ + 1) / 2);
    if (index_ % 2 == 1) return detail::make_step(nonfill_explicit_mstd(l, checks_), {{"l", l}});
    return detail::make_step(nonfill_explicit_mdts(l, checks_), {{"l", l}, {"added", 8 * l + 14}});
  }

 private:
  MethodConfig config_;
  Checks checks_;
  std::size_t index_ = 0;
};

// ---------------------------------------------------------------------------
// Fringe chain: odd steps append m + (k+1)n - R; each even step is the
// smallest initial segment of the newly appended elements that makes the
// set MDTS.

class FringeGenerator {
 public:
  FringeGenerator(const IntegerSet& left, const IntegerSet& right, std::int64_t n, std::int64_t m,
                  ConditionMode mode, Checks checks = kDefaultChecks)
      : checks_(checks) {
    config_.method = Method::nonfill_fringe;
    config_.left = left;
    config_.right = right;
    config_.n = n;
    config_.m = m;
    config_.mode = mode;
    odd_ = fringe_base(left, right, n, m, mode);
  }

  [[nodiscard]] const MethodConfig& config() const noexcept { return config_; }
  [[nodiscard]] bool no_fill_in() const noexcept { return true; }
  [[nodiscard]] std::optional<Ratio> density_limit() const {
    return Ratio{static_cast<std::int64_t>(config_.right.size()) - 1, config_.n};
  }

  ChainStep next() {
    ++index_;
    if (index_ == 1) return detail::make_step(odd_, {{"k", 0}});
    if (index_ % 2 == 1) {
      odd_ = std::move(pending_);
      return detail::make_step(odd_, {{"k", block_}});
    }
    ++block_;
    pending_ = set_union(odd_, fringe_block(config_.right, config_.n, config_.m, block_));
    if (classify(pending_) != Classification::mstd) {
      throw chain_break_error(index_ + 1, "step " + std::to_string(index_ + 1) + " is not MSTD");
    }
    // Only an initial segment of the new elements keeps every gap of the
    // MDTS step a gap of the next MSTD step.
    const IntegerSet added = set_difference(pending_, odd_);
    for (std::size_t len = 1; len < added.size(); ++len) {
      IntegerSet candidate = set_union(
          odd_, IntegerSet::from_sorted(std::vector<std::int64_t>(added.begin(), added.begin() + static_cast<std::ptrdiff_t>(len))));
      ChainStep step = detail::make_step(std::move(candidate),
                                         {{"k", block_}, {"added", static_cast<std::int64_t>(len)}});
      if (step.profile.classification == Classification::mdts) return step;
    }
    throw chain_break_error(index_, "no MDTS set between steps " + std::to_string(index_ - 1) +
                                        " and " + std::to_string(index_ + 1));
  }

 private:
  MethodConfig config_;
  Checks checks_;
  IntegerSet odd_;
  IntegerSet pending_;
  std::int64_t block_ = 0;
  std::size_t index_ = 0;
};

// ---------------------------------------------------------------------------

template <class Generator>
ChainRecord take(Generator& gen, std::size_t steps) {
  if (steps < 1) throw precondition_error("num_steps >= 1");
  ChainRecord record;
  record.config = gen.config();
  record.no_fill_in_required = gen.no_fill_in();
  record.density_limit = gen.density_limit();
  record.steps.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) record.steps.push_back(gen.next());
  return record;
}

inline ChainRecord fill1_chain(const IntegerSet& seed, std::size_t steps, Fill1Options options = {},
                               Checks checks = kDefaultChecks) {
  Fill1Generator gen(seed, options, checks);
  return take(gen, steps);
}

inline ChainRecord fill2_chain(const IntegerSet& left, const IntegerSet& right, std::int64_t n,
                               std::size_t steps, Checks checks = kDefaultChecks) {
  Fill2Generator gen(left, right, n, checks);
  return take(gen, steps);
}

inline ChainRecord nonfill_chain(std::size_t steps, Checks checks = kDefaultChecks) {
  NonfillGenerator gen(checks);
  return take(gen, steps);
}

inline ChainRecord fringe_chain(const IntegerSet& left, const IntegerSet& right, std::int64_t n,
                                std::int64_t m, ConditionMode mode, std::size_t steps,
                                Checks checks = kDefaultChecks) {
  FringeGenerator gen(left, right, n, m, mode, checks);
  return take(gen, steps);
}

/// Builds the chain described by `config`.
inline ChainRecord build_chain(const MethodConfig& config, std::size_t steps,
                               Checks checks = kDefaultChecks) {
  switch (config.method) {
    case Method::fill1: return fill1_chain(config.seed, steps, config.fill1, checks);
    case Method::fill2: return fill2_chain(config.left, config.right, config.n, steps, checks);
    case Method::nonfill_explicit: return nonfill_chain(steps, checks);
    case Method::nonfill_fringe:
      return fringe_chain(config.left, config.right, config.n, config.m, config.mode, steps, checks);
  }
  throw precondition_error("known method");
}

// ---------------------------------------------------------------------------
// Verification.

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

struct VerificationReport {
  std::vector<CheckOutcome> checks;
  std::vector<OracleRoute> routes;  // per step, how the profile was re-derived

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
  }
  [[nodiscard]] const CheckOutcome* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  bool force_no_fill_in = false;  // check gaps even if the record does not require it
};

namespace detail {

// First element of `later` inside [lo, hi] that is missing from `earlier`.
inline std::optional<std::int64_t> first_filled_gap(const IntegerSet& earlier,
                                                    const IntegerSet& later) {
  const std::int64_t lo = earlier.min();
  const std::int64_t hi = earlier.max();
  auto it = std::lower_bound(later.begin(), later.end(), lo);
  auto e = earlier.begin();
  for (; it != later.end() && *it <= hi; ++it) {
    while (e != earlier.end() && *e < *it) ++e;
    if (e == earlier.end() || *e != *it) return *it;
  }
  return std::nullopt;
}

inline std::string label(std::size_t i) { return "A_" + std::to_string(i + 1); }

}  // namespace detail

/// Re-derives every profile with the independent oracle and checks proper
/// nesting, strict alternation and (when required) that no gap is filled.
inline VerificationReport verify_chain(const ChainRecord& chain, VerifyOptions options = {}) {
  VerificationReport report;
  const auto& steps = chain.steps;

  CheckOutcome length{"length", steps.size() >= 2, std::to_string(steps.size()) + " steps"};
  report.checks.push_back(length);

  CheckOutcome profiles{"profiles", true, ""};
  std::vector<Classification> classes;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].set.empty()) {
      profiles.passed = false;
      profiles.detail = detail::label(i) + " is empty";
      classes.push_back(Classification::balanced);
      continue;
    }
    const OracleResult oracle = independent_profile(steps[i].set);
    report.routes.push_back(oracle.route);
    classes.push_back(oracle.profile.classification);
    if (profiles.passed && !(oracle.profile == steps[i].profile)) {
      profiles.passed = false;
      profiles.detail = detail::label(i) + ": recorded sums=" + std::to_string(steps[i].profile.sum_count) +
                        " diffs=" + std::to_string(steps[i].profile.diff_count) + ", oracle sums=" +
                        std::to_string(oracle.profile.sum_count) +
                        " diffs=" + std::to_string(oracle.profile.diff_count);
    }
  }
  if (profiles.passed) profiles.detail = "all " + std::to_string(steps.size()) + " profiles agree";
  report.checks.push_back(profiles);

  CheckOutcome nesting{"nesting", true, "each set properly contains its predecessor"};
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (!is_proper_subset(steps[i - 1].set, steps[i].set)) {
      nesting.passed = false;
      nesting.detail = detail::label(i - 1) + " is not a proper subset of " + detail::label(i);
      break;
    }
  }
  report.checks.push_back(nesting);

  CheckOutcome alternation{"alternation", true, "classifications alternate MSTD/MDTS"};
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const bool bad = classes[i] == Classification::balanced ||
                     (i > 0 && classes[i] == classes[i - 1]);
    if (bad) {
      alternation.passed = false;
      alternation.detail = detail::label(i) + " is " + std::string(to_string(classes[i]));
      break;
    }
  }
  report.checks.push_back(alternation);

  if (chain.no_fill_in_required || options.force_no_fill_in) {
    CheckOutcome fill{"no_fill_in", true, "no gap of any step is filled later"};
    // With monotone hulls a gap that survives one step stays inside the
    // hull, so consecutive checks suffice; otherwise compare all pairs.
    bool monotone = true;
    for (std::size_t i = 1; i < steps.size(); ++i) {
      if (steps[i].set.empty() || steps[i - 1].set.empty() ||
          steps[i].set.min() > steps[i - 1].set.min() || steps[i].set.max() < steps[i - 1].set.max()) {
        monotone = false;
      }
    }
    for (std::size_t i = 0; i + 1 < steps.size() && fill.passed; ++i) {
      if (steps[i].set.empty()) continue;
      const std::size_t last = monotone ? i + 1 : steps.size() - 1;
      for (std::size_t j = i + 1; j <= last; ++j) {
        if (auto x = detail::first_filled_gap(steps[i].set, steps[j].set)) {
          fill.passed = false;
          fill.detail = std::to_string(*x) + " is a gap of " + detail::label(i) + " but lies in " +
                        detail::label(j);
          break;
        }
      }
    }
    report.checks.push_back(fill);
  }
  return report;
}

}  // namespace sumdiff
