#pragma once

// Generators for the MSTD and MDTS families used by the chain engines.
//
// Every generator validates its hypotheses eagerly and throws
// precondition_error naming the clause that failed. With Checks::on the
// stated sumset / difference-set identities of the output are re-derived
// and a violation throws postcondition_error.

#include <cstdint>
#include <string>
#include <vector>

#include "sumdiff/errors.hpp"
#include "sumdiff/integer_set.hpp"
#include "sumdiff/profile.hpp"
#include "sumdiff/sumset.hpp"

namespace sumdiff {

enum class Checks { off, on };

#ifdef NDEBUG
inline constexpr Checks kDefaultChecks = Checks::off;
#else
inline constexpr Checks kDefaultChecks = Checks::on;
#endif

namespace detail {

inline void ensure(Checks checks, bool ok, const std::string& what) {
  if (checks == Checks::on && !ok) throw postcondition_error(what);
}

inline void require(bool ok, const std::string& clause, const std::string& detail = "") {
  if (!ok) throw precondition_error(clause, detail);
}

inline bool within(const IntegerSet& a, std::int64_t lo, std::int64_t hi) {
  return a.empty() || (a.min() >= lo && a.max() <= hi);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Multi-dimensional arithmetic progressions.

/// {base + sum_i x_i * steps[i] : starts[i] <= x_i <= starts[i] + lengths[i] - 1}.
/// Zero dimensions is the single point {base}.
struct MultiDimAP {
  std::int64_t base = 0;
  std::vector<std::int64_t> steps;
  std::vector<std::int64_t> starts;
  std::vector<std::int64_t> lengths;

  static MultiDimAP point(std::int64_t a) { return MultiDimAP{a, {}, {}, {}}; }

  [[nodiscard]] std::size_t dimension() const noexcept { return steps.size(); }

  [[nodiscard]] IntegerSet expand(std::uint64_t max_points = std::uint64_t{1} << 24) const {
    detail::require(starts.size() == steps.size() && lengths.size() == steps.size(),
                    "progression dimensions agree");
    std::uint64_t total = 1;
    for (std::int64_t k : lengths) {
      detail::require(k >= 1, "progression lengths >= 1");
      if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(k), &total) || total > max_points) {
        throw resource_limit_error("progression has more than " + std::to_string(max_points) +
                                   " points");
      }
    }
    std::vector<std::int64_t> points{base};
    for (std::size_t i = 0; i < steps.size(); ++i) {
      std::vector<std::int64_t> next;
      next.reserve(points.size() * static_cast<std::size_t>(lengths[i]));
      for (std::int64_t p : points) {
        for (std::int64_t x = 0; x < lengths[i]; ++x) {
          const std::int64_t coord = detail::checked_add(starts[i], x);
          next.push_back(detail::checked_add(p, detail::checked_mul(coord, steps[i])));
        }
      }
      points = std::move(next);
    }
    return IntegerSet(std::move(points));
  }
};

// ---------------------------------------------------------------------------
// [0, m-1] \ {r}

/// Requires m >= 4 and 2 <= r <= m - 3. Then B+B = [0, 2m-2] and
/// B-B = [-(m-1), m-1].
inline IntegerSet interval_minus_point(std::int64_t m, std::int64_t r, Checks checks = kDefaultChecks) {
  detail::require(m >= 4, "m >= 4", "m = " + std::to_string(m));
  detail::require(r >= 2 && r <= m - 3, "2 <= r <= m-3", "r = " + std::to_string(r));
  IntegerSet b = without_element(IntegerSet::interval(0, m - 1), r);
  if (checks == Checks::on) {
    detail::ensure(checks, is_interval(sumset(b), 0, 2 * m - 2), "B+B == [0, 2m-2]");
    detail::ensure(checks, is_interval(diffset(b), -(m - 1), m - 1), "B-B == [-(m-1), m-1]");
  }
  return b;
}

// ---------------------------------------------------------------------------
// Symmetric set plus one point.

struct SymmetricPlusPointParams {
  std::int64_t m = 0;
  IntegerSet b;        // subset of [0, m-1]
  MultiDimAP lstar;    // inside the gaps of b
  std::int64_t k = 2;  // number of copies of m - L* in L
};

struct SymmetricPlusPoint {
  IntegerSet set;        // B u L u (a* - B) u {m}
  IntegerSet l;          // (m - L*) + m*[1,k]
  std::int64_t a_star;   // min(L) + max(L)
};

/// Checks every hypothesis of the construction; throws precondition_error.
/// The difference-set hypothesis is B-B = [-(m-1), m-1].
inline void validate(const SymmetricPlusPointParams& p) {
  using detail::require;
  require(p.m >= 4, "m >= 4", "m = " + std::to_string(p.m));
  require(p.k >= 2, "k >= 2", "k = " + std::to_string(p.k));
  require(!p.b.empty() && detail::within(p.b, 0, p.m - 1), "B subset of [0, m-1]");
  require(is_interval(sumset(p.b), 0, 2 * p.m - 2), "B+B == [0, 2m-2]");
  require(is_interval(diffset(p.b), -(p.m - 1), p.m - 1), "B-B == [-(m-1), m-1]");
  const IntegerSet lstar = p.lstar.expand();
  require(detail::within(lstar, 0, p.m - 1) && set_intersection(lstar, p.b).empty(),
          "L* subset of [0, m-1] \\ B");
  require(p.b.contains(lstar.min() - 1), "min(L*) - 1 in B");
  require(!sumset(lstar).contains(p.m), "m not in L* + L*");
}

inline SymmetricPlusPoint symmetric_plus_point_mstd(const SymmetricPlusPointParams& p,
                                                    Checks checks = kDefaultChecks) {
  validate(p);
  using detail::checked_add;
  using detail::checked_mul;
  using detail::checked_sub;
  const IntegerSet lstar = p.lstar.expand();
  std::vector<std::int64_t> l;
  l.reserve(lstar.size() * static_cast<std::size_t>(p.k));
  for (std::int64_t x : lstar) {
    for (std::int64_t j = 1; j <= p.k; ++j) {
      l.push_back(checked_add(checked_sub(p.m, x), checked_mul(p.m, j)));
    }
  }
  IntegerSet lset(std::move(l));
  const std::int64_t a_star =
      checked_sub(checked_sub(checked_mul(checked_add(p.k, 3), p.m), lstar.min()), lstar.max());
  IntegerSet out = set_union(set_union(p.b, lset), reflect(a_star, p.b));
  out = with_element(out, p.m);
  if (checks == Checks::on) {
    detail::ensure(checks, a_star == lset.min() + lset.max(), "a* == min(L) + max(L)");
    detail::ensure(checks, classify(out) == Classification::mstd, "symmetric set plus m is MSTD");
  }
  return {std::move(out), std::move(lset), a_star};
}

// ---------------------------------------------------------------------------
// [0, m] u {p}

struct IntervalPlusPoint {
  IntegerSet set;
  std::int64_t surplus;  // |A-A| - |A+A|
};

/// Requires m >= 1, p > m + 1. The surplus is m when p > 2m and p - m - 1
/// otherwise.
inline IntervalPlusPoint mdts_interval_plus_point(std::int64_t m, std::int64_t p,
                                                  Checks checks = kDefaultChecks) {
  detail::require(m >= 1, "m >= 1", "m = " + std::to_string(m));
  detail::require(p > m + 1, "p > m+1", "m = " + std::to_string(m) + ", p = " + std::to_string(p));
  (void)detail::checked_mul(p, 2);
  IntegerSet a = with_element(IntegerSet::interval(0, m), p);
  const std::int64_t surplus = p > 2 * m ? m : p - m - 1;
  if (checks == Checks::on) {
    const SetProfile prof = profile(a);
    detail::ensure(checks, prof.diff_count - prof.sum_count == surplus,
                   "|A-A| - |A+A| == surplus formula");
    if (p > 2 * m) {
      detail::ensure(checks, prof.sum_count == 3 * m + 3 && prof.diff_count == 4 * m + 3,
                     "|A+A| == 3m+3 and |A-A| == 4m+3");
    } else {
      detail::ensure(checks, prof.sum_count == m + p + 2 && prof.diff_count == 2 * p + 1,
                     "|A+A| == m+p+2 and |A-A| == 2p+1");
    }
  }
  return {std::move(a), surplus};
}

// ---------------------------------------------------------------------------
// Padding a P_n MSTD set L u R with long runs between its halves.

struct PaddedExtensionParams {
  IntegerSet left;   // L, subset of [1, n]
  IntegerSet right;  // R, subset of [n+1, 2n]
  std::int64_t n = 0;
  std::int64_t k = 0;       // >= n
  std::int64_t m = 0;       // width of the middle window
  IntegerSet middle;        // M, subset of [n+k+1, n+k+m]
};

inline void validate(const PaddedExtensionParams& p) {
  using detail::require;
  require(p.n >= 1, "n >= 1");
  require(p.m >= 0, "m >= 0");
  require(detail::within(p.left, 1, p.n), "L subset of [1, n]");
  require(detail::within(p.right, p.n + 1, 2 * p.n), "R subset of [n+1, 2n]");
  const IntegerSet a = set_union(p.left, p.right);
  require(a.contains(1), "1 in A");
  require(a.contains(2 * p.n), "2n in A");
  require(p.k >= p.n, "k >= n", "k = " + std::to_string(p.k) + ", n = " + std::to_string(p.n));
  require(is_pn(a, p.n), "A is P_n");
  require(classify(a) == Classification::mstd, "A is MSTD");
  const std::int64_t lo = p.n + p.k + 1;
  const std::int64_t hi = p.n + p.k + p.m;
  require(detail::within(p.middle, lo, hi), "M subset of [n+k+1, n+k+m]");
  require(!p.middle.contains(lo), "n+k+1 not in M");
  std::int64_t gap = 0;
  for (std::int64_t x = lo; x <= hi; ++x) {
    gap = p.middle.contains(x) ? 0 : gap + 1;
    require(gap <= p.k, "M has no run of more than k missing elements",
            "run ending at " + std::to_string(x));
  }
}

/// L u [n+1, n+k] u M u [n+k+m+1, n+2k+m] u (R + 2k + m), which is MSTD.
inline IntegerSet padded_extension(const PaddedExtensionParams& p, Checks checks = kDefaultChecks) {
  validate(p);
  const std::int64_t shift = 2 * p.k + p.m;
  IntegerSet out = set_union(p.left, IntegerSet::interval(p.n + 1, p.n + p.k));
  out = set_union(out, p.middle);
  out = set_union(out, IntegerSet::interval(p.n + p.k + p.m + 1, p.n + 2 * p.k + p.m));
  out = set_union(out, translate(p.right, shift));
  detail::ensure(checks, checks == Checks::off || classify(out) == Classification::mstd,
                 "padded extension is MSTD");
  return out;
}

// ---------------------------------------------------------------------------
// Explicit non-filling family built on {0,1,2,5,8,9,10}.

inline const IntegerSet& nonfill_core() {
  static const IntegerSet core{0, 1, 2, 5, 8, 9, 10};
  return core;
}

/// A_0 u (8*[1,l] + {6,7,9,10}); sums [0,16l+20] \ {21}, differences
/// [-8l-10, 8l+10] \ {+-(8l+3)}.
inline IntegerSet nonfill_explicit_mstd(std::int64_t l, Checks checks = kDefaultChecks) {
  detail::require(l >= 1, "l >= 1", "l = " + std::to_string(l));
  (void)detail::checked_add(detail::checked_mul(l, 16), 28);
  std::vector<std::int64_t> v(nonfill_core().begin(), nonfill_core().end());
  v.reserve(v.size() + 4 * static_cast<std::size_t>(l));
  for (std::int64_t j = 1; j <= l; ++j) {
    for (std::int64_t c : {6, 7, 9, 10}) v.push_back(8 * j + c);
  }
  IntegerSet a = IntegerSet::from_sorted(std::move(v));
  if (checks == Checks::on) {
    const IntegerSet s = sumset(a);
    detail::ensure(checks, s == without_element(IntegerSet::interval(0, 16 * l + 20), 21),
                   "A+A == [0,16l+20] \\ {21}");
    const IntegerSet d = diffset(a);
    const IntegerSet expect = set_difference(IntegerSet::interval(-8 * l - 10, 8 * l + 10),
                                             IntegerSet{-8 * l - 3, 8 * l + 3});
    detail::ensure(checks, d == expect, "A-A == [-8l-10, 8l+10] \\ {+-(8l+3)}");
  }
  return a;
}

/// nonfill_explicit_mstd(l) u {8l+14}: four new sums, six new differences.
inline IntegerSet nonfill_explicit_mdts(std::int64_t l, Checks checks = kDefaultChecks) {
  const IntegerSet base = nonfill_explicit_mstd(l, checks);
  IntegerSet a = with_element(base, 8 * l + 14);
  if (checks == Checks::on) {
    const IntegerSet new_sums = set_difference(sumset(a), sumset(base));
    detail::ensure(checks,
                   new_sums == IntegerSet{16 * l + 21, 16 * l + 23, 16 * l + 24, 16 * l + 28},
                   "new sums == {16l+21, 16l+23, 16l+24, 16l+28}");
    const IntegerSet new_diffs = set_difference(diffset(a), diffset(base));
    detail::ensure(checks,
                   new_diffs == IntegerSet{-8 * l - 14, -8 * l - 13, -8 * l - 12, 8 * l + 12,
                                           8 * l + 13, 8 * l + 14},
                   "new differences == +-{8l+12, 8l+13, 8l+14}");
  }
  return a;
}

// ---------------------------------------------------------------------------
// Fringe construction: A_1 = L u [n,m] u (m+n-R), then keep appending
// reflected copies of R one period further out.

enum class ConditionMode { strict, generalized };

constexpr std::string_view to_string(ConditionMode mode) noexcept {
  return mode == ConditionMode::strict ? "strict" : "generalized";
}

inline ConditionMode condition_mode_from_string(std::string_view s) {
  if (s == "strict") return ConditionMode::strict;
  if (s == "generalized") return ConditionMode::generalized;
  throw precondition_error("condition mode is strict or generalized", std::string(s));
}

struct FringeCheck {
  ConditionMode mode = ConditionMode::strict;
  bool passed = false;
  bool n_in_left = false;
  bool n_in_right = false;
  std::vector<std::int64_t> missing_left_left;    // [0,n-1] \ (L+L)
  std::vector<std::int64_t> missing_right_right;  // [0,n-1] \ (R+R)
  std::vector<std::int64_t> missing_left_right;   // [0,n-1] \ (L+R)

  [[nodiscard]] std::string diagnostics() const {
    auto list = [](const std::vector<std::int64_t>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "}";
    };
    return std::string(to_string(mode)) + (passed ? " pass" : " fail") +
           ": n in L=" + (n_in_left ? "yes" : "no") + ", n in R=" + (n_in_right ? "yes" : "no") +
           ", missing L+L=" + list(missing_left_left) + ", missing R+R=" +
           list(missing_right_right) + ", missing L+R=" + list(missing_left_right);
  }
};

/// Strict: n in L and R, [0,n-1] in L+L and in R+R, [0,n-1] not in L+R.
/// Generalized: n in L and R, and |[0,n-1] \ (L+L)| < 2 |[0,n-1] \ (L+R)|.
inline FringeCheck check_fringe_conditions(const IntegerSet& left, const IntegerSet& right,
                                           std::int64_t n, ConditionMode mode) {
  detail::require(n >= 1, "n >= 1");
  detail::require(!left.empty() && detail::within(left, 0, n), "L subset of [0, n]");
  detail::require(!right.empty() && detail::within(right, 0, n), "R subset of [0, n]");
  FringeCheck c;
  c.mode = mode;
  c.n_in_left = left.contains(n);
  c.n_in_right = right.contains(n);
  c.missing_left_left = missing_in(sumset(left), 0, n - 1);
  c.missing_right_right = missing_in(sumset(right), 0, n - 1);
  c.missing_left_right = missing_in(sum(left, right), 0, n - 1);
  const bool ends = c.n_in_left && c.n_in_right;
  if (mode == ConditionMode::strict) {
    c.passed = ends && c.missing_left_left.empty() && c.missing_right_right.empty() &&
               !c.missing_left_right.empty();
  } else {
    c.passed = ends && c.missing_left_left.size() < 2 * c.missing_left_right.size();
  }
  return c;
}

/// k-th reflected copy of R: m + (k+1)n - R.
inline IntegerSet fringe_block(const IntegerSet& right, std::int64_t n, std::int64_t m,
                               std::int64_t k) {
  using detail::checked_add;
  using detail::checked_mul;
  return reflect(checked_add(m, checked_mul(checked_add(k, 1), n)), right);
}

/// Sums of A_1 missing from [n+1, 2m+n-1].
inline std::vector<std::int64_t> fringe_middle_gaps(const IntegerSet& base, std::int64_t n,
                                                    std::int64_t m) {
  return missing_in(sumset(base), n + 1, 2 * m + n - 1);
}

/// A_1 = L u [n,m] u (m+n-R). Requires the conditions in `mode`, m >= n,
/// and that A_1+A_1 lacks at most one element of [n+1, 2m+n-1].
inline IntegerSet fringe_base(const IntegerSet& left, const IntegerSet& right, std::int64_t n,
                              std::int64_t m, ConditionMode mode) {
  const FringeCheck c = check_fringe_conditions(left, right, n, mode);
  detail::require(c.passed, "fringe conditions", c.diagnostics());
  detail::require(m >= n, "m >= n", "m = " + std::to_string(m) + ", n = " + std::to_string(n));
  IntegerSet a = set_union(set_union(left, IntegerSet::interval(n, m)), fringe_block(right, n, m, 0));
  const auto gaps = fringe_middle_gaps(a, n, m);
  detail::require(gaps.size() <= 1, "m is suitable",
                  std::to_string(gaps.size()) + " sums missing from [n+1, 2m+n-1]");
  detail::require(classify(a) == Classification::mstd, "A_1 is MSTD");
  return a;
}

/// A_{2k+1} = A_1 u (m+2n-R) u ... u (m+(k+1)n-R).
inline IntegerSet fringe_mstd(const IntegerSet& left, const IntegerSet& right, std::int64_t n,
                              std::int64_t m, std::int64_t k, ConditionMode mode,
                              Checks checks = kDefaultChecks) {
  detail::require(k >= 0, "k >= 0");
  IntegerSet a = fringe_base(left, right, n, m, mode);
  for (std::int64_t j = 1; j <= k; ++j) a = set_union(a, fringe_block(right, n, m, j));
  detail::ensure(checks, checks == Checks::off || classify(a) == Classification::mstd,
                 "fringe step is MSTD");
  return a;
}

}  // namespace sumdiff
