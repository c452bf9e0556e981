#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sumdiff/integer_set.hpp"
#include "sumdiff/sumset.hpp"

namespace sumdiff {

/// Exact non-negative rational used for densities and growth ratios.
/// Rounding happens only when rendering.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  [[nodiscard]] double value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  /// Half-up rounding to `places` decimals, computed exactly.
  [[nodiscard]] std::string rounded(int places = 3) const {
    __int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const __int128 scaled = static_cast<__int128>(num) * scale;
    __int128 q = scaled / den;
    if (2 * (scaled % den) >= den) ++q;
    const auto whole = static_cast<std::int64_t>(q / scale);
    auto frac = static_cast<std::int64_t>(q % scale);
    std::string out = std::to_string(whole);
    if (places > 0) {
      std::string digits = std::to_string(frac);
      out += '.';
      out += std::string(static_cast<std::size_t>(places) - digits.size(), '0') + digits;
    }
    return out;
  }

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
  }
};

enum class Classification { mstd, mdts, balanced };

constexpr std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::mstd: return "MSTD";
    case Classification::mdts: return "MDTS";
    case Classification::balanced: return "BALANCED";
  }
  return "BALANCED";
}

inline Classification classification_from_string(std::string_view s) {
  if (s == "MSTD") return Classification::mstd;
  if (s == "MDTS") return Classification::mdts;
  if (s == "BALANCED") return Classification::balanced;
  throw precondition_error("classification tag", std::string(s));
}

constexpr Classification classify_counts(std::int64_t sums, std::int64_t diffs) noexcept {
  if (sums > diffs) return Classification::mstd;
  if (sums < diffs) return Classification::mdts;
  return Classification::balanced;
}

struct SetProfile {
  std::int64_t cardinality = 0;
  std::int64_t diameter = 0;
  std::int64_t sum_count = 0;
  std::int64_t diff_count = 0;
  Classification classification = Classification::balanced;
  std::optional<Ratio> density;  // cardinality / diameter; none for singletons

  friend bool operator==(const SetProfile&, const SetProfile&) = default;
};

/// Assembles a profile from externally computed counts.
inline SetProfile make_profile(const IntegerSet& a, std::int64_t sums, std::int64_t diffs) {
  SetProfile p;
  p.cardinality = static_cast<std::int64_t>(a.size());
  p.diameter = a.diameter();
  p.sum_count = sums;
  p.diff_count = diffs;
  p.classification = classify_counts(sums, diffs);
  if (p.diameter > 0) p.density = Ratio{p.cardinality, p.diameter};
  return p;
}

inline SetProfile profile(const IntegerSet& a, SumAlgorithm algorithm = SumAlgorithm::automatic) {
  if (a.empty()) throw precondition_error("nonempty set", "profile of the empty set is undefined");
  return make_profile(a, static_cast<std::int64_t>(sumset(a, algorithm).size()),
                      static_cast<std::int64_t>(diffset(a, algorithm).size()));
}

inline Classification classify(const IntegerSet& a) { return profile(a).classification; }

/// c with c - A == A, if any. Only c = min + max can work.
inline std::optional<std::int64_t> symmetry_center(const IntegerSet& a) {
  if (a.empty()) return std::nullopt;
  const std::int64_t c = detail::checked_add(a.min(), a.max());
  const auto& v = a.vector();
  for (std::size_t i = 0, j = v.size() - 1; i <= j; ++i, --j) {
    if (v[i] + v[j] != c) return std::nullopt;
    if (j == 0) break;
  }
  return c;
}

/// [2a+n, 2b-n] in A+A and [-(b-a)+n, (b-a)-n] in A-A, where a = min A and
/// b = max A.
inline bool is_pn(const IntegerSet& a, std::int64_t n) {
  if (a.empty()) throw precondition_error("nonempty set");
  if (n < 0) throw precondition_error("n >= 0");
  const std::int64_t lo = a.min();
  const std::int64_t hi = a.max();
  const std::int64_t d = a.diameter();
  using detail::checked_add;
  using detail::checked_sub;
  const bool sums_ok = covers(sumset(a), checked_add(checked_add(lo, lo), n),
                              checked_sub(checked_add(hi, hi), n));
  if (!sums_ok) return false;
  return covers(diffset(a), checked_sub(n, d), checked_sub(d, n));
}

}  // namespace sumdiff
