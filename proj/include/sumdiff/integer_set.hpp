#pragma once

// Finite sets of 64-bit integers.
//
// An IntegerSet keeps its elements as a strictly increasing vector. When the
// diameter is small enough it also carries a bit-vector whose bit i stands
// for min() + i; the sumset code ORs shifted copies of that vector.

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumdiff/errors.hpp"

namespace sumdiff {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw arithmetic_range_error("integer overflow in " + std::to_string(a) + " + " +
                                 std::to_string(b));
  }
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw arithmetic_range_error("integer overflow in " + std::to_string(a) + " - " +
                                 std::to_string(b));
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw arithmetic_range_error("integer overflow in " + std::to_string(a) + " * " +
                                 std::to_string(b));
  }
  return out;
}

// hi - lo as an unsigned distance; never overflows for lo <= hi.
constexpr std::uint64_t span_between(std::int64_t lo, std::int64_t hi) noexcept {
  return static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
}

}  // namespace detail

/// Inclusive run [lo, hi] of consecutive integers.
struct Run {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Fixed-width bit-vector; bit i represents the integer offset() + i.
class DenseBits {
 public:
  DenseBits() = default;
  DenseBits(std::int64_t offset, std::uint64_t bit_count)
      : offset_(offset), bit_count_(bit_count), words_((bit_count + 63) / 64, 0) {}

  [[nodiscard]] std::int64_t offset() const noexcept { return offset_; }
  [[nodiscard]] std::uint64_t bit_count() const noexcept { return bit_count_; }
  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

  [[nodiscard]] bool test(std::uint64_t i) const noexcept {
    return i < bit_count_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  void set(std::uint64_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  [[nodiscard]] std::uint64_t count() const noexcept {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
  }

  /// this |= (src << shift). Requires shift + src.bit_count() <= bit_count().
  void or_shifted(const DenseBits& src, std::uint64_t shift) noexcept {
    const std::size_t word_shift = shift >> 6;
    const unsigned bit_shift = static_cast<unsigned>(shift & 63);
    const std::size_t n = src.words_.size();
    std::uint64_t* dst = words_.data() + word_shift;
    const std::uint64_t* s = src.words_.data();
    const std::size_t room = words_.size() - word_shift;
    if (bit_shift == 0) {
      for (std::size_t j = 0; j < n; ++j) dst[j] |= s[j];
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t w = s[j];
      dst[j] |= w << bit_shift;
      if (j + 1 < room) dst[j + 1] |= w >> (64 - bit_shift);
    }
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        const auto bit = static_cast<std::uint64_t>(std::countr_zero(w));
        f((static_cast<std::uint64_t>(wi) << 6) | bit);
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const DenseBits&, const DenseBits&) = default;

 private:
  std::int64_t offset_ = 0;
  std::uint64_t bit_count_ = 0;
  std::vector<std::uint64_t> words_;
};

class IntegerSet {
 public:
  using value_type = std::int64_t;
  using const_iterator = std::vector<std::int64_t>::const_iterator;

  /// Largest diameter + 1 for which the bit-vector is materialized.
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 28;

  IntegerSet() = default;
  IntegerSet(std::initializer_list<std::int64_t> values)
      : IntegerSet(std::vector<std::int64_t>(values)) {}

  /// Any order, duplicates allowed.
  explicit IntegerSet(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    elems_ = std::move(values);
    build_dense();
  }

  /// Throws precondition_error unless `values` is strictly increasing.
  static IntegerSet from_sorted(std::vector<std::int64_t> values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i - 1] >= values[i]) {
        throw precondition_error("strictly increasing elements",
                                 "element " + std::to_string(i) + " is " +
                                     std::to_string(values[i]));
      }
    }
    IntegerSet out;
    out.elems_ = std::move(values);
    out.build_dense();
    return out;
  }

  /// [lo, hi]; empty when lo > hi.
  static IntegerSet interval(std::int64_t lo, std::int64_t hi) {
    IntegerSet out;
    if (lo > hi) return out;
    const std::uint64_t n = detail::span_between(lo, hi) + 1;
    if (n > (std::uint64_t{1} << 34)) throw resource_limit_error("interval too large to materialize");
    out.elems_.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      out.elems_[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + i);
    }
    out.build_dense();
    return out;
  }

  /// Runs sorted by lo and pairwise disjoint.
  static IntegerSet from_runs(std::span<const Run> runs) {
    std::uint64_t total = 0;
    for (const Run& r : runs) total += detail::span_between(r.lo, r.hi) + 1;
    if (total > (std::uint64_t{1} << 34)) throw resource_limit_error("run list too large to materialize");
    std::vector<std::int64_t> values;
    values.reserve(total);
    for (const Run& r : runs) {
      for (std::int64_t v = r.lo;; ++v) {
        values.push_back(v);
        if (v == r.hi) break;
      }
    }
    return from_sorted(std::move(values));
  }

  static IntegerSet from_dense(DenseBits bits) {
    IntegerSet out;
    out.elems_.reserve(bits.count());
    const std::int64_t base = bits.offset();
    bits.for_each_set([&](std::uint64_t i) {
      out.elems_.push_back(static_cast<std::int64_t>(static_cast<std::uint64_t>(base) + i));
    });
    if (!out.elems_.empty() && out.elems_.front() == base &&
        detail::span_between(base, out.elems_.back()) + 1 == bits.bit_count() &&
        bits.bit_count() <= kDenseLimit) {
      out.bits_ = std::move(bits);
    } else {
      out.build_dense();
    }
    return out;
  }

  [[nodiscard]] std::span<const std::int64_t> elements() const noexcept { return elems_; }
  [[nodiscard]] const std::vector<std::int64_t>& vector() const noexcept { return elems_; }
  [[nodiscard]] const_iterator begin() const noexcept { return elems_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return elems_.end(); }
  [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elems_.empty(); }

  [[nodiscard]] std::int64_t min() const {
    require_nonempty();
    return elems_.front();
  }
  [[nodiscard]] std::int64_t max() const {
    require_nonempty();
    return elems_.back();
  }

  /// max - min; 0 for empty and singleton sets.
  [[nodiscard]] std::int64_t diameter() const {
    if (elems_.size() < 2) return 0;
    return detail::checked_sub(elems_.back(), elems_.front());
  }

  [[nodiscard]] bool contains(std::int64_t x) const noexcept {
    if (elems_.empty() || x < elems_.front() || x > elems_.back()) return false;
    if (bits_) return bits_->test(detail::span_between(elems_.front(), x));
    return std::binary_search(elems_.begin(), elems_.end(), x);
  }

  /// Bit-vector view, or nullptr when the diameter exceeds kDenseLimit.
  [[nodiscard]] const DenseBits* dense() const noexcept { return bits_ ? &*bits_ : nullptr; }

  [[nodiscard]] std::vector<Run> runs() const {
    std::vector<Run> out;
    for (std::int64_t v : elems_) {
      if (!out.empty() && out.back().hi != INT64_MAX && out.back().hi + 1 == v) {
        out.back().hi = v;
      } else {
        out.push_back({v, v});
      }
    }
    return out;
  }

  [[nodiscard]] std::size_t run_count() const noexcept {
    std::size_t n = elems_.empty() ? 0 : 1;
    for (std::size_t i = 1; i < elems_.size(); ++i) {
      if (elems_[i] != elems_[i - 1] + 1) ++n;
    }
    return n;
  }

  friend bool operator==(const IntegerSet& a, const IntegerSet& b) noexcept {
    return a.elems_ == b.elems_;
  }

 private:
  void require_nonempty() const {
    if (elems_.empty()) throw precondition_error("nonempty set");
  }

  void build_dense() {
    bits_.reset();
    if (elems_.empty()) return;
    const std::uint64_t width = detail::span_between(elems_.front(), elems_.back()) + 1;
    // width == 0 means the span wrapped the full 64-bit range.
    if (width == 0 || width > kDenseLimit) return;
    DenseBits bits(elems_.front(), width);
    for (std::int64_t v : elems_) bits.set(detail::span_between(elems_.front(), v));
    bits_ = std::move(bits);
  }

  std::vector<std::int64_t> elems_;
  std::optional<DenseBits> bits_;
};

// ---------------------------------------------------------------------------
// Elementary set algebra.

inline IntegerSet set_union(const IntegerSet& a, const IntegerSet& b) {
  std::vector<std::int64_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IntegerSet::from_sorted(std::move(out));
}

inline IntegerSet set_difference(const IntegerSet& a, const IntegerSet& b) {
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IntegerSet::from_sorted(std::move(out));
}

inline IntegerSet set_intersection(const IntegerSet& a, const IntegerSet& b) {
  std::vector<std::int64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IntegerSet::from_sorted(std::move(out));
}

inline bool is_subset(const IntegerSet& a, const IntegerSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_proper_subset(const IntegerSet& a, const IntegerSet& b) {
  return a.size() < b.size() && is_subset(a, b);
}

/// Elements of `a` inside [lo, hi].
inline IntegerSet restrict_to(const IntegerSet& a, std::int64_t lo, std::int64_t hi) {
  auto first = std::lower_bound(a.begin(), a.end(), lo);
  auto last = std::upper_bound(a.begin(), a.end(), hi);
  if (first >= last) return {};
  return IntegerSet::from_sorted(std::vector<std::int64_t>(first, last));
}

inline IntegerSet with_element(const IntegerSet& a, std::int64_t x) {
  return set_union(a, IntegerSet{x});
}

inline IntegerSet without_element(const IntegerSet& a, std::int64_t x) {
  return set_difference(a, IntegerSet{x});
}

/// {a + y : a in A}
inline IntegerSet translate(const IntegerSet& a, std::int64_t y) {
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (std::int64_t v : a) out.push_back(detail::checked_add(v, y));
  return IntegerSet::from_sorted(std::move(out));
}

/// {c - a : a in A}
inline IntegerSet reflect(std::int64_t c, const IntegerSet& a) {
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (auto it = a.vector().rbegin(); it != a.vector().rend(); ++it) {
    out.push_back(detail::checked_sub(c, *it));
  }
  return IntegerSet::from_sorted(std::move(out));
}

/// {x*a + y : a in A}; x != 0.
inline IntegerSet affine(const IntegerSet& a, std::int64_t x, std::int64_t y) {
  if (x == 0) throw precondition_error("dilation x != 0");
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (std::int64_t v : a) out.push_back(detail::checked_add(detail::checked_mul(x, v), y));
  if (x < 0) std::reverse(out.begin(), out.end());
  return IntegerSet::from_sorted(std::move(out));
}

// ---------------------------------------------------------------------------
// Canonical text form: "0,2,3,4,7,11,12,14".

inline std::string to_string(const IntegerSet& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(a.vector()[i]);
  }
  return out;
}

/// Parses `int(,int)*` with strictly increasing values. No whitespace.
inline IntegerSet parse_set(std::string_view text) {
  if (text.empty()) throw parse_error(0, "empty set literal");
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    std::int64_t v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) throw parse_error(start, "integer out of 64-bit range");
    if (ec != std::errc() || ptr == first) throw parse_error(start, "expected integer");
    pos = static_cast<std::size_t>(ptr - text.data());
    if (!values.empty() && v <= values.back()) {
      throw parse_error(start, "elements must be strictly increasing");
    }
    values.push_back(v);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw parse_error(pos, "expected ','");
    ++pos;
  }
  return IntegerSet::from_sorted(std::move(values));
}

}  // namespace sumdiff
