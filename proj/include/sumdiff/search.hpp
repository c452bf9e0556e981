#pragma once

// Brute-force exploration of small sets.
//
// The oracle functions here deliberately avoid sumset.hpp: they rebuild
// A+A and A-A from explicit element pairs (or run pairs for large
// structured sets) so that they can be used to check the bit-vector code.
//
// The enumerations partition their domain into fixed chunks that are
// independent of the worker count, and merge chunk results in chunk order,
// so every report is identical for any number of workers.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sumdiff/errors.hpp"
#include "sumdiff/integer_set.hpp"
#include "sumdiff/profile.hpp"

namespace sumdiff {

inline constexpr std::size_t kOracleMaxSize = 10000;
inline constexpr std::size_t kOracleMaxRuns = 10000;

// ---------------------------------------------------------------------------
// Oracle.

namespace detail {

inline void sort_unique(std::vector<std::int64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Appends `buffer` into the deduplicated `acc`.
inline void flush_into(std::vector<std::int64_t>& acc, std::vector<std::int64_t>& buffer) {
  sort_unique(buffer);
  std::vector<std::int64_t> merged;
  merged.reserve(acc.size() + buffer.size());
  std::set_union(acc.begin(), acc.end(), buffer.begin(), buffer.end(), std::back_inserter(merged));
  acc = std::move(merged);
  buffer.clear();
}

inline SetProfile oracle_assemble(const IntegerSet& a, std::int64_t sums, std::int64_t diffs) {
  SetProfile p;
  p.cardinality = static_cast<std::int64_t>(a.size());
  p.diameter = a.size() < 2 ? 0 : a.vector().back() - a.vector().front();
  p.sum_count = sums;
  p.diff_count = diffs;
  p.classification = sums > diffs   ? Classification::mstd
                     : sums < diffs ? Classification::mdts
                                    : Classification::balanced;
  if (p.diameter > 0) p.density = Ratio{p.cardinality, p.diameter};
  return p;
}

}  // namespace detail

/// A+A as a sorted list, from every pair a <= b.
inline std::vector<std::int64_t> oracle_sums(const IntegerSet& a) {
  const auto& v = a.vector();
  std::vector<std::int64_t> acc;
  std::vector<std::int64_t> buffer;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) buffer.push_back(detail::checked_add(v[i], v[j]));
    if (buffer.size() > (1U << 22)) detail::flush_into(acc, buffer);
  }
  detail::flush_into(acc, buffer);
  return acc;
}

/// A-A as a sorted list, from every ordered pair.
inline std::vector<std::int64_t> oracle_diffs(const IntegerSet& a) {
  const auto& v = a.vector();
  std::vector<std::int64_t> acc;
  std::vector<std::int64_t> buffer;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) buffer.push_back(detail::checked_sub(v[i], v[j]));
    if (buffer.size() > (1U << 22)) detail::flush_into(acc, buffer);
  }
  detail::flush_into(acc, buffer);
  return acc;
}

/// Profile by explicit double loop. |A| <= kOracleMaxSize.
inline SetProfile oracle_profile(const IntegerSet& a) {
  if (a.empty()) throw precondition_error("nonempty set");
  if (a.size() > kOracleMaxSize) {
    throw resource_limit_error("oracle_profile is capped at " + std::to_string(kOracleMaxSize) +
                               " elements");
  }
  return detail::oracle_assemble(a, static_cast<std::int64_t>(oracle_sums(a).size()),
                                 static_cast<std::int64_t>(oracle_diffs(a).size()));
}

namespace detail {

struct Interval {
  std::int64_t lo;
  std::int64_t hi;
};

inline std::vector<Interval> oracle_runs(const IntegerSet& a) {
  std::vector<Interval> out;
  const auto& v = a.vector();
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
    out.push_back({v[i], v[j]});
    i = j + 1;
  }
  return out;
}

// Size of the union of closed intervals.
inline std::int64_t union_size(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::int64_t total = 0;
  std::int64_t cur_lo = 0;
  std::int64_t cur_hi = 0;
  bool open = false;
  for (const Interval& p : parts) {
    if (open && p.lo <= cur_hi + 1) {
      cur_hi = std::max(cur_hi, p.hi);
      continue;
    }
    if (open) total += cur_hi - cur_lo + 1;
    cur_lo = p.lo;
    cur_hi = p.hi;
    open = true;
  }
  if (open) total += cur_hi - cur_lo + 1;
  return total;
}

}  // namespace detail

/// Profile from pairs of maximal runs; for large sets with few runs.
inline SetProfile oracle_profile_by_runs(const IntegerSet& a) {
  if (a.empty()) throw precondition_error("nonempty set");
  const auto runs = detail::oracle_runs(a);
  if (runs.size() > kOracleMaxRuns) {
    throw resource_limit_error("run oracle is capped at " + std::to_string(kOracleMaxRuns) + " runs");
  }
  (void)detail::checked_add(a.vector().back(), a.vector().back());
  (void)detail::checked_add(a.vector().front(), a.vector().front());
  (void)detail::checked_sub(a.vector().back(), a.vector().front());
  std::vector<detail::Interval> sums;
  std::vector<detail::Interval> diffs;
  for (const auto& x : runs) {
    for (const auto& y : runs) {
      sums.push_back({x.lo + y.lo, x.hi + y.hi});
      diffs.push_back({x.lo - y.hi, x.hi - y.lo});
    }
  }
  return detail::oracle_assemble(a, detail::union_size(std::move(sums)),
                                 detail::union_size(std::move(diffs)));
}

enum class OracleRoute { pairs, runs };

struct OracleResult {
  SetProfile profile;
  OracleRoute route;
};

/// Double loop when small enough, run pairs otherwise.
inline OracleResult independent_profile(const IntegerSet& a) {
  if (a.size() <= kOracleMaxSize) return {oracle_profile(a), OracleRoute::pairs};
  return {oracle_profile_by_runs(a), OracleRoute::runs};
}

// ---------------------------------------------------------------------------
// Shared machinery for the enumerations.

struct SearchOptions {
  unsigned workers = 1;            // 0 = hardware concurrency
  std::size_t max_witnesses = 16;  // per witness list
};

struct DiameterRow {
  std::int64_t diameter = 0;
  std::uint64_t total = 0;
  std::uint64_t mstd = 0;
  std::uint64_t mdts = 0;
  std::uint64_t balanced = 0;
  friend bool operator==(const DiameterRow&, const DiameterRow&) = default;
};

struct SearchReport {
  std::string kind;
  std::string domain;
  std::uint64_t total = 0;
  std::uint64_t mstd_count = 0;
  std::uint64_t mdts_count = 0;
  std::uint64_t balanced_count = 0;
  std::vector<DiameterRow> by_diameter;
  std::optional<std::int64_t> min_mstd_diameter;
  std::optional<std::int64_t> min_mstd_cardinality;
  std::vector<IntegerSet> min_diameter_witnesses;     // MSTD, minimal diameter, lex order
  std::vector<IntegerSet> min_cardinality_witnesses;  // MSTD, minimal cardinality, lex order
  std::optional<std::uint64_t> seed;
  std::optional<double> mstd_fraction;
  std::optional<double> ci_low;   // 95% Wilson score interval
  std::optional<double> ci_high;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

namespace detail {

inline unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Calls body(i) for i in [0, chunks) on `workers` threads.
template <class Body>
void parallel_chunks(std::size_t chunks, unsigned workers, Body&& body) {
  workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(chunks, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < chunks; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < chunks && !failed; i = next++) body(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Sum and difference masks of a set of positions in [0, 31]. Bit s of the
// first mask is set iff s is a sum; bit (x + 31) of the second iff x is a
// difference.
inline std::pair<std::uint64_t, std::uint64_t> small_sums_diffs(std::uint32_t set) {
  std::uint64_t sums = 0;
  std::uint64_t diffs = 0;
  const std::uint64_t wide = set;
  std::uint32_t rest = set;
  while (rest != 0) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    sums |= wide << i;
    diffs |= wide << (31 - i);
  }
  return {sums, diffs};
}

inline IntegerSet mask_to_set(std::uint64_t mask) {
  std::vector<std::int64_t> v;
  while (mask != 0) {
    v.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return IntegerSet::from_sorted(std::move(v));
}

struct Witness {
  std::int64_t diameter;
  std::int64_t cardinality;
  std::vector<std::int64_t> elements;
};

// Running bounded list: keeps the `cap` smallest entries under `less`.
template <class Less>
void offer(std::vector<Witness>& list, Witness w, std::size_t cap, Less less) {
  if (cap == 0) return;
  if (list.size() == cap && !less(w, list.back())) return;
  auto pos = std::lower_bound(list.begin(), list.end(), w, less);
  list.insert(pos, std::move(w));
  if (list.size() > cap) list.pop_back();
}

inline bool by_diameter(const Witness& a, const Witness& b) {
  return std::tie(a.diameter, a.elements) < std::tie(b.diameter, b.elements);
}
inline bool by_cardinality(const Witness& a, const Witness& b) {
  return std::tie(a.cardinality, a.elements) < std::tie(b.cardinality, b.elements);
}

struct ChunkResult {
  std::vector<DiameterRow> rows;
  std::vector<Witness> small_diameter;
  std::vector<Witness> small_cardinality;

  DiameterRow& row(std::int64_t d) {
    if (rows.empty() || rows.back().diameter != d) rows.push_back({d, 0, 0, 0, 0});
    return rows.back();
  }

  void record(std::int64_t d, std::uint64_t mask, std::uint64_t sums, std::uint64_t diffs,
              std::size_t cap) {
    DiameterRow& r = row(d);
    ++r.total;
    if (sums > diffs) {
      ++r.mstd;
      Witness w{d, std::popcount(mask), {}};
      const bool keep_d = small_diameter.size() < cap || w.diameter <= small_diameter.back().diameter;
      const bool keep_c =
          small_cardinality.size() < cap || w.cardinality <= small_cardinality.back().cardinality;
      if (keep_d || keep_c) {
        w.elements = mask_to_set(mask).vector();
        if (keep_d) offer(small_diameter, w, cap, by_diameter);
        if (keep_c) offer(small_cardinality, std::move(w), cap, by_cardinality);
      }
    } else if (sums < diffs) {
      ++r.mdts;
    } else {
      ++r.balanced;
    }
  }
};

inline void merge_into(SearchReport& report, std::vector<ChunkResult>& chunks, std::size_t cap) {
  std::vector<Witness> by_d;
  std::vector<Witness> by_c;
  for (ChunkResult& c : chunks) {
    for (const DiameterRow& r : c.rows) {
      if (report.by_diameter.empty() || report.by_diameter.back().diameter != r.diameter) {
        report.by_diameter.push_back({r.diameter, 0, 0, 0, 0});
      }
      DiameterRow& dst = report.by_diameter.back();
      dst.total += r.total;
      dst.mstd += r.mstd;
      dst.mdts += r.mdts;
      dst.balanced += r.balanced;
    }
    for (auto& w : c.small_diameter) offer(by_d, std::move(w), cap, by_diameter);
    for (auto& w : c.small_cardinality) offer(by_c, std::move(w), cap, by_cardinality);
  }
  for (const DiameterRow& r : report.by_diameter) {
    report.total += r.total;
    report.mstd_count += r.mstd;
    report.mdts_count += r.mdts;
    report.balanced_count += r.balanced;
  }
  if (!by_d.empty()) report.min_mstd_diameter = by_d.front().diameter;
  if (!by_c.empty()) report.min_mstd_cardinality = by_c.front().cardinality;
  for (auto& w : by_d) {
    if (w.diameter == by_d.front().diameter) {
      report.min_diameter_witnesses.push_back(IntegerSet::from_sorted(std::move(w.elements)));
    }
  }
  for (auto& w : by_c) {
    if (w.cardinality == by_c.front().cardinality) {
      report.min_cardinality_witnesses.push_back(IntegerSet::from_sorted(std::move(w.elements)));
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive enumeration by diameter.

inline constexpr std::int64_t kMaxExhaustiveDiameter = 26;

/// Every subset of [0, d] containing 0 and d, for each 0 <= d <= d_max.
inline SearchReport exhaustive_by_diameter(std::int64_t d_max, const SearchOptions& options = {}) {
  if (d_max < 0) throw precondition_error("d_max >= 0");
  if (d_max > kMaxExhaustiveDiameter) {
    throw resource_limit_error("exhaustive_by_diameter is capped at d_max = " +
                               std::to_string(kMaxExhaustiveDiameter));
  }
  constexpr unsigned kChunkBits = 14;
  struct Unit {
    std::int64_t d;
    std::uint64_t first;
    std::uint64_t last;
  };
  std::vector<Unit> units;
  for (std::int64_t d = 0; d <= d_max; ++d) {
    const std::uint64_t count = d < 2 ? 1 : std::uint64_t{1} << (d - 1);
    for (std::uint64_t lo = 0; lo < count; lo += std::uint64_t{1} << kChunkBits) {
      units.push_back({d, lo, std::min(count, lo + (std::uint64_t{1} << kChunkBits))});
    }
  }
  std::vector<detail::ChunkResult> results(units.size());
  detail::parallel_chunks(units.size(), options.workers, [&](std::size_t i) {
    const Unit& u = units[i];
    detail::ChunkResult& out = results[i];
    for (std::uint64_t interior = u.first; interior < u.last; ++interior) {
      std::uint32_t set = 1;
      if (u.d >= 1) set |= (static_cast<std::uint32_t>(interior) << 1) | (std::uint32_t{1} << u.d);
      const auto [s, df] = detail::small_sums_diffs(set);
      out.record(u.d, set, static_cast<std::uint64_t>(std::popcount(s)),
                 static_cast<std::uint64_t>(std::popcount(df)), options.max_witnesses);
    }
  });
  SearchReport report;
  report.kind = "diameter";
  report.domain = "subsets of [0,d] containing 0 and d, 0 <= d <= " + std::to_string(d_max);
  detail::merge_into(report, results, options.max_witnesses);
  return report;
}

// ---------------------------------------------------------------------------
// Bounded-cardinality scan.

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (static_cast<unsigned __int128>(1) << 64) - 1) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

inline std::pair<std::uint64_t, std::uint64_t> pair_counts(std::uint64_t mask) {
  std::vector<std::int64_t> v;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) v.push_back(std::countr_zero(m));
  std::vector<std::int64_t> sums;
  std::vector<std::int64_t> diffs;
  for (std::int64_t x : v) {
    for (std::int64_t y : v) {
      sums.push_back(x + y);
      diffs.push_back(x - y);
    }
  }
  sort_unique(sums);
  sort_unique(diffs);
  return {sums.size(), diffs.size()};
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultScanBudget = 100'000'000;

/// Subsets of [0, d] containing 0 and d with at most card_max elements,
/// for each 0 <= d <= d_max.
inline SearchReport min_cardinality_scan(std::int64_t d_max, std::int64_t card_max,
                                         const SearchOptions& options = {},
                                         std::uint64_t budget = kDefaultScanBudget) {
  if (d_max < 0) throw precondition_error("d_max >= 0");
  if (card_max < 1) throw precondition_error("card_max >= 1");
  if (d_max > 63) throw resource_limit_error("min_cardinality_scan is capped at d_max = 63");
  struct Unit {
    std::int64_t d;
    std::int64_t interior;  // number of interior elements
  };
  std::vector<Unit> units;
  std::uint64_t work = 0;
  for (std::int64_t d = 0; d <= d_max; ++d) {
    if (d == 0) {
      units.push_back({0, 0});
      ++work;
      continue;
    }
    if (card_max < 2) continue;
    for (std::int64_t j = 0; j <= std::min(card_max - 2, d - 1); ++j) {
      const std::uint64_t c = detail::binomial(static_cast<std::uint64_t>(d - 1),
                                               static_cast<std::uint64_t>(j));
      if (c > budget || work + c > budget) {
        throw resource_limit_error("scan exceeds the budget of " + std::to_string(budget) + " sets");
      }
      work += c;
      units.push_back({d, j});
    }
  }
  std::vector<detail::ChunkResult> results(units.size());
  detail::parallel_chunks(units.size(), options.workers, [&](std::size_t i) {
    const Unit u = units[i];
    detail::ChunkResult& out = results[i];
    auto visit = [&](std::uint64_t interior) {
      const std::uint64_t set = u.d == 0 ? 1 : (1 | (interior << 1) | (std::uint64_t{1} << u.d));
      if (u.d <= 31) {
        const auto [s, df] = detail::small_sums_diffs(static_cast<std::uint32_t>(set));
        out.record(u.d, set, static_cast<std::uint64_t>(std::popcount(s)),
                   static_cast<std::uint64_t>(std::popcount(df)), options.max_witnesses);
      } else {
        const auto [s, df] = detail::pair_counts(set);
        out.record(u.d, set, s, df, options.max_witnesses);
      }
    };
    if (u.d == 0 || u.interior == 0) {
      visit(0);
      return;
    }
    // Gosper's hack over (d-1)-bit words with `interior` bits set.
    const std::uint64_t limit_bit = std::uint64_t{1} << (u.d - 1);
    std::uint64_t x = (std::uint64_t{1} << u.interior) - 1;
    while (x < limit_bit) {
      visit(x);
      const std::uint64_t c = x & (~x + 1);
      const std::uint64_t r = x + c;
      if (r == 0) break;
      x = (((r ^ x) >> 2) / c) | r;
    }
  });
  SearchReport report;
  report.kind = "cardinality";
  report.domain = "subsets of [0,d] containing 0 and d with at most " + std::to_string(card_max) +
                  " elements, 0 <= d <= " + std::to_string(d_max);
  detail::merge_into(report, results, options.max_witnesses);
  return report;
}

// ---------------------------------------------------------------------------
// Random subsets.

/// SplitMix64; used only to derive independent per-chunk seeds.
struct SplitMix64 {
  std::uint64_t state;
  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

/// Seed for chunk `index` of a run seeded with `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 outer{seed};
  SplitMix64 inner{outer.next() ^ (index * 0xD1B54A32D192ED03ULL)};
  inner.next();
  return inner.next();
}

inline constexpr std::uint64_t kSampleChunk = 1024;

/// 95% Wilson score interval for `hits` out of `n`.
inline std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t n) {
  constexpr double z = 1.959963984540054;
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(hits) / nn;
  const double denom = 1.0 + z * z / nn;
  const double centre = (phat + z * z / (2 * nn)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / nn + z * z / (4 * nn * nn)) / denom;
  const double lo = hits == 0 ? 0.0 : std::max(0.0, centre - half);
  const double hi = hits == n ? 1.0 : std::min(1.0, centre + half);
  return {lo, hi};
}

/// Uniform random subsets of [1, n]: each element kept independently with
/// probability 1/2. The empty subset counts as balanced.
inline SearchReport sample_mstd_proportion(std::int64_t n, std::uint64_t samples, std::uint64_t seed,
                                           const SearchOptions& options = {}) {
  if (n < 1 || n > 10000) throw precondition_error("1 <= n <= 10000", "n = " + std::to_string(n));
  if (samples < 1) throw precondition_error("samples >= 1");
  const std::size_t chunks = static_cast<std::size_t>((samples + kSampleChunk - 1) / kSampleChunk);
  struct Counts {
    std::uint64_t mstd = 0, mdts = 0, balanced = 0;
  };
  std::vector<Counts> results(chunks);
  const auto words = static_cast<std::size_t>((n + 63) / 64);
  detail::parallel_chunks(chunks, options.workers, [&](std::size_t c) {
    std::mt19937_64 rng(derive_seed(seed, c));
    const std::uint64_t first = c * kSampleChunk;
    const std::uint64_t last = std::min(samples, first + kSampleChunk);
    Counts& out = results[c];
    std::vector<std::int64_t> elems;
    for (std::uint64_t s = first; s < last; ++s) {
      elems.clear();
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = rng();
        const std::int64_t base = static_cast<std::int64_t>(w) * 64;
        for (; bits != 0; bits &= bits - 1) {
          const std::int64_t v = base + std::countr_zero(bits) + 1;
          if (v <= n) elems.push_back(v);
        }
      }
      if (elems.empty()) {
        ++out.balanced;
        continue;
      }
      switch (profile(IntegerSet::from_sorted(elems)).classification) {
        case Classification::mstd: ++out.mstd; break;
        case Classification::mdts: ++out.mdts; break;
        case Classification::balanced: ++out.balanced; break;
      }
    }
  });
  SearchReport report;
  report.kind = "sample";
  report.domain = "uniform random subsets of [1," + std::to_string(n) + "], " +
                  std::to_string(samples) + " samples";
  for (const Counts& c : results) {
    report.mstd_count += c.mstd;
    report.mdts_count += c.mdts;
    report.balanced_count += c.balanced;
  }
  report.total = samples;
  report.seed = seed;
  report.mstd_fraction = static_cast<double>(report.mstd_count) / static_cast<double>(samples);
  const auto [lo, hi] = wilson_interval(report.mstd_count, samples);
  report.ci_low = lo;
  report.ci_high = hi;
  return report;
}

// ---------------------------------------------------------------------------
// Seeds for the interval-filling chain.

struct SplitSeed {
  IntegerSet left;   // A n [1, n]
  IntegerSet right;  // A n [n+1, 2n]
  friend bool operator==(const SplitSeed&, const SplitSeed&) = default;
};

inline constexpr std::int64_t kMaxSeedN = 12;

/// Every A in [1, 2n] with 1, 2n in A, n not in A, A P_n and MSTD.
/// Ordered by the bit pattern of A's free positions.
inline std::vector<SplitSeed> find_fill2_seeds(std::int64_t n, const SearchOptions& options = {}) {
  if (n < 1) throw precondition_error("n >= 1");
  if (n > kMaxSeedN) {
    throw resource_limit_error("find_fill2_seeds is capped at n = " + std::to_string(kMaxSeedN));
  }
  if (n == 1) return {};  // 1 = n must both be in and out of A
  std::vector<int> free;
  for (std::int64_t x = 2; x <= 2 * n - 1; ++x) {
    if (x != n) free.push_back(static_cast<int>(x));
  }
  const std::uint64_t count = std::uint64_t{1} << free.size();
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 12;
  const std::size_t chunks = static_cast<std::size_t>((count + kChunk - 1) / kChunk);
  std::vector<std::vector<std::uint32_t>> found(chunks);
  // Positions are elements themselves (A in [1, 2n], 2n <= 24).
  const std::uint64_t sum_hull = ((std::uint64_t{1} << (3 * n + 1)) - 1) & ~((std::uint64_t{1} << (n + 2)) - 1);
  const std::uint64_t diff_hull = ((std::uint64_t{1} << (31 + n)) - 1) & ~((std::uint64_t{1} << (31 - n + 1)) - 1);
  detail::parallel_chunks(chunks, options.workers, [&](std::size_t c) {
    const std::uint64_t first = c * kChunk;
    const std::uint64_t last = std::min(count, first + kChunk);
    for (std::uint64_t bits = first; bits < last; ++bits) {
      std::uint32_t set = (std::uint32_t{1} << 1) | (std::uint32_t{1} << (2 * n));
      for (std::size_t i = 0; i < free.size(); ++i) {
        if ((bits >> i) & 1U) set |= std::uint32_t{1} << free[i];
      }
      const auto [s, df] = detail::small_sums_diffs(set);
      if (std::popcount(s) <= std::popcount(df)) continue;
      if ((s & sum_hull) != sum_hull || (df & diff_hull) != diff_hull) continue;
      found[c].push_back(set);
    }
  });
  std::vector<SplitSeed> out;
  for (const auto& chunk : found) {
    for (std::uint32_t set : chunk) {
      const IntegerSet a = detail::mask_to_set(set);
      out.push_back({restrict_to(a, 1, n), restrict_to(a, n + 1, 2 * n)});
    }
  }
  return out;
}

}  // namespace sumdiff
