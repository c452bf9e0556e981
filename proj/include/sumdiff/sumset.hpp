#pragma once

// X + Y, A + A and A - A.
//
// Two algorithms:
//   bitset  for each element of the smaller operand, OR the other
//           operand's bit-vector in at that shift. O(|X| * diam(Y) / 64).
//   runs    add every pair of maximal runs and merge the resulting
//           intervals. O(r_X * r_Y log(r_X * r_Y)).
// `automatic` picks whichever is cheaper for the operands at hand; the
// structured sets produced by the chain engines have few runs and very
// large diameters, random sets the opposite.

#include <cmath>
#include <cstdint>
#include <vector>

#include "sumdiff/integer_set.hpp"

namespace sumdiff {

enum class SumAlgorithm { automatic, bitset, runs };

namespace detail {

inline void check_sum_range(const IntegerSet& x, const IntegerSet& y) {
  (void)checked_add(x.min(), y.min());
  (void)checked_add(x.max(), y.max());
}

inline IntegerSet sum_bitset(const IntegerSet& x, const IntegerSet& y) {
  const IntegerSet& small = x.size() <= y.size() ? x : y;
  const IntegerSet& large = x.size() <= y.size() ? y : x;
  const DenseBits* lb = large.dense();
  if (lb == nullptr || small.dense() == nullptr) {
    throw resource_limit_error("bitset sum requires operands with diameter below the dense limit");
  }
  const std::uint64_t width = span_between(small.min(), small.max()) + lb->bit_count();
  DenseBits out(checked_add(small.min(), large.min()), width);
  const std::int64_t base = small.min();
  for (std::int64_t v : small) out.or_shifted(*lb, span_between(base, v));
  return IntegerSet::from_dense(std::move(out));
}

inline std::vector<Run> merge_runs(std::vector<Run> runs) {
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.lo < b.lo; });
  std::vector<Run> merged;
  for (const Run& r : runs) {
    if (!merged.empty() && (merged.back().hi == INT64_MAX || r.lo <= merged.back().hi + 1)) {
      merged.back().hi = std::max(merged.back().hi, r.hi);
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

inline IntegerSet sum_runs(const IntegerSet& x, const IntegerSet& y) {
  const std::vector<Run> rx = x.runs();
  const std::vector<Run> ry = y.runs();
  std::vector<Run> pairs;
  pairs.reserve(rx.size() * ry.size());
  for (const Run& a : rx) {
    for (const Run& b : ry) pairs.push_back({a.lo + b.lo, a.hi + b.hi});
  }
  const std::vector<Run> merged = merge_runs(std::move(pairs));
  return IntegerSet::from_runs(merged);
}

inline SumAlgorithm choose_algorithm(const IntegerSet& x, const IntegerSet& y) {
  const bool dense_ok = x.dense() != nullptr && y.dense() != nullptr &&
                        span_between(x.min(), x.max()) + span_between(y.min(), y.max()) <
                            2 * IntegerSet::kDenseLimit;
  if (!dense_ok) return SumAlgorithm::runs;
  const double small = static_cast<double>(std::min(x.size(), y.size()));
  const auto& large = x.size() <= y.size() ? y : x;
  const double bit_cost = small * (static_cast<double>(large.dense()->words().size()) + 1.0);
  const double pairs = static_cast<double>(x.run_count()) * static_cast<double>(y.run_count());
  const double run_cost = pairs * (std::log2(pairs + 1.0) + 2.0);
  return run_cost < bit_cost ? SumAlgorithm::runs : SumAlgorithm::bitset;
}

}  // namespace detail

/// {a + b : a in X, b in Y}. Empty if either operand is empty.
inline IntegerSet sum(const IntegerSet& x, const IntegerSet& y,
                      SumAlgorithm algorithm = SumAlgorithm::automatic) {
  if (x.empty() || y.empty()) return {};
  detail::check_sum_range(x, y);
  if (algorithm == SumAlgorithm::automatic) algorithm = detail::choose_algorithm(x, y);
  return algorithm == SumAlgorithm::bitset ? detail::sum_bitset(x, y) : detail::sum_runs(x, y);
}

/// {-a : a in A}
inline IntegerSet negate(const IntegerSet& a) { return reflect(0, a); }

/// A + A
inline IntegerSet sumset(const IntegerSet& a, SumAlgorithm algorithm = SumAlgorithm::automatic) {
  return sum(a, a, algorithm);
}

/// A - A; symmetric about 0.
inline IntegerSet diffset(const IntegerSet& a, SumAlgorithm algorithm = SumAlgorithm::automatic) {
  if (a.empty()) return {};
  (void)detail::checked_sub(a.max(), a.min());
  (void)detail::checked_sub(a.min(), a.max());
  return sum(a, negate(a), algorithm);
}

/// True iff [lo, hi] is a subset of A (vacuously true when lo > hi).
inline bool covers(const IntegerSet& a, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) return true;
  auto first = std::lower_bound(a.begin(), a.end(), lo);
  auto last = std::upper_bound(a.begin(), a.end(), hi);
  return static_cast<std::uint64_t>(last - first) == detail::span_between(lo, hi) + 1;
}

/// True iff A == [lo, hi].
inline bool is_interval(const IntegerSet& a, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) return a.empty();
  return !a.empty() && a.min() == lo && a.max() == hi && covers(a, lo, hi);
}

/// Elements of [lo, hi] not in A.
inline std::vector<std::int64_t> missing_in(const IntegerSet& a, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  if (lo > hi) return out;
  auto it = std::lower_bound(a.begin(), a.end(), lo);
  for (std::int64_t v = lo;; ++v) {
    if (it != a.end() && *it == v) {
      ++it;
    } else {
      out.push_back(v);
    }
    if (v == hi) break;
  }
  return out;
}

}  // namespace sumdiff
