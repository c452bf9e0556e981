#pragma once

// Published values for the three example chains and the growth summary,
// with the cells known to disagree with the computed sets.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumdiff/chains.hpp"
#include "sumdiff/profile.hpp"

namespace sumdiff::reference {

struct Row {
  std::int64_t sums;
  std::int64_t diffs;
  std::int64_t card;
  std::int64_t diam;
  const char* card_ratio;  // as printed; nullptr for N/A
  const char* diam_ratio;
  const char* density;
};

struct KnownDiscrepancy {
  std::size_t row;  // 0-based
  std::string column;
  std::string note;
};

struct Table {
  std::string name;
  MethodConfig config;
  std::vector<Row> rows;
  const char* footer;  // limiting MSTD density as printed
  std::vector<KnownDiscrepancy> known;
};

inline const IntegerSet& conway_set() {
  static const IntegerSet s{0, 2, 3, 4, 7, 11, 12, 14};
  return s;
}

inline const IntegerSet& fill2_example_left() {
  static const IntegerSet s{1, 3, 4, 8, 9};
  return s;
}

inline const IntegerSet& fill2_example_right() {
  static const IntegerSet s{12, 13, 15, 18, 19, 20};
  return s;
}

inline const Table& fill1_conway() {
  static const Table t = [] {
    Table t;
    t.name = "filling in 1, Conway seed";
    t.config.method = Method::fill1;
    t.config.seed = conway_set();
    t.rows = {{26, 25, 8, 14, nullptr, nullptr, "0.571"},
              {33, 35, 16, 17, "2.000", "1.214", "0.941"},
              {126, 125, 39, 63, "2.438", "3.706", "0.619"},
              {130, 131, 65, 65, "1.667", "1.032", "1.000"},
              {414, 413, 135, 207, "2.077", "3.185", "0.652"},
              {418, 419, 209, 209, "1.548", "1.010", "1.000"},
              {1278, 1277, 423, 639, "2.024", "3.057", "0.662"}};
    t.footer = "0.667";
    return t;
  }();
  return t;
}

inline const Table& fill2_example() {
  static const Table t = [] {
    Table t;
    t.name = "filling in 2, P_10 seed";
    t.config.method = Method::fill2;
    t.config.left = fill2_example_left();
    t.config.right = fill2_example_right();
    t.config.n = 10;
    t.rows = {{38, 37, 11, 16, nullptr, nullptr, "0.688"},
              {52, 61, 21, 30, "1.909", "1.875", "0.700"},
              {80, 79, 31, 40, "1.476", "1.333", "0.775"},
              {92, 101, 41, 50, "1.323", "1.25", "0.820"},
              {120, 119, 51, 60, "1.244", "1.2", "0.850"},
              {132, 141, 61, 70, "1.196", "1.167", "0.871"},
              {160, 159, 71, 80, "1.164", "1.143", "0.888"}};
    t.footer = "1.000";
    t.known = {
        {0, "Diameter", "published 16, but the seed spans [1,20]"},
        {0, "Density", "published value uses the diameter 16"},
        {1, "D(A_i)/D(A_{i-1})", "published value is 30/16, from the same diameter 16"},
    };
    return t;
  }();
  return t;
}

inline const Table& nonfill_explicit() {
  static const Table t = [] {
    Table t;
    t.name = "non-filling in, explicit";
    t.config.method = Method::nonfill_explicit;
    t.rows = {{36, 35, 11, 18, nullptr, nullptr, "0.611"},
              {40, 41, 12, 22, "1.091", "1.222", "0.545"},
              {52, 51, 15, 26, "1.25", "1.182", "0.577"},
              {56, 57, 16, 30, "1.067", "1.154", "0.533"},
              {68, 67, 19, 34, "1.188", "1.133", "0.559"},
              {72, 73, 20, 38, "1.053", "1.118", "0.526"},
              {84, 83, 23, 42, "1.15", "1.105", "0.548"}};
    t.footer = "0.500";
    return t;
  }();
  return t;
}

inline const std::vector<const Table*>& all_tables() {
  static const std::vector<const Table*> tables{&fill1_conway(), &fill2_example(), &nonfill_explicit()};
  return tables;
}

/// Reference table whose configuration matches `config`, if any.
inline const Table* find(const MethodConfig& config) {
  for (const Table* t : all_tables()) {
    if (t->config.method != config.method) continue;
    switch (config.method) {
      case Method::fill1:
        if (config.seed == t->config.seed && config.fill1.p_rule == PRule::minimize_n &&
            config.fill1.k == 2) {
          return t;
        }
        break;
      case Method::fill2:
        if (config.left == t->config.left && config.right == t->config.right && config.n == t->config.n) {
          return t;
        }
        break;
      case Method::nonfill_explicit: return t;
      case Method::nonfill_fringe: break;
    }
  }
  return nullptr;
}

/// Growth summary row as published.
struct GrowthRow {
  Method method;
  std::int64_t first_card;
  std::int64_t first_diam;
  std::optional<std::int64_t> card_step;  // linear methods
  std::optional<std::int64_t> diam_step;
  std::optional<std::int64_t> min_factor;  // exponential methods: rates exceed this factor
  const char* type;
};

inline const std::vector<GrowthRow>& growth_summary() {
  static const std::vector<GrowthRow> rows{
      {Method::fill1, 8, 14, std::nullopt, std::nullopt, 3, "Exponential"},
      {Method::fill2, 11, 19, 20, 20, std::nullopt, "Linear"},
      {Method::nonfill_explicit, 11, 18, 4, 8, std::nullopt, "Linear"},
  };
  return rows;
}

// ---------------------------------------------------------------------------

struct CellMismatch {
  std::size_t row;
  std::string column;
  std::string published;
  std::string computed;
  bool known = false;
  std::string note;
};

namespace detail {

// "1.25" -> 1250 thousandths.
inline std::int64_t thousandths(const std::string& text) {
  const auto dot = text.find('.');
  std::int64_t whole = std::stoll(text.substr(0, dot));
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  frac.resize(3, '0');
  return whole * 1000 + std::stoll(frac);
}

inline std::string rounded_or_na(const std::optional<Ratio>& r) { return r ? r->rounded(3) : "N/A"; }

}  // namespace detail

/// Cells where the chain differs from the published table: integers exactly,
/// ratios and densities after rounding to 3 decimals.
inline std::vector<CellMismatch> compare(const ChainRecord& chain, const Table& table) {
  std::vector<CellMismatch> out;
  auto known_note = [&](std::size_t row, const std::string& column) -> std::optional<std::string> {
    for (const auto& k : table.known) {
      if (k.row == row && k.column == column) return k.note;
    }
    return std::nullopt;
  };
  auto push = [&](std::size_t row, const std::string& column, std::string published, std::string computed) {
    CellMismatch m{row, column, std::move(published), std::move(computed), false, ""};
    if (auto note = known_note(row, column)) {
      m.known = true;
      m.note = *note;
    }
    out.push_back(std::move(m));
  };
  auto integer = [&](std::size_t row, const char* column, std::int64_t published, std::int64_t computed) {
    if (published != computed) push(row, column, std::to_string(published), std::to_string(computed));
  };
  auto decimal = [&](std::size_t row, const char* column, const char* published,
                     const std::optional<Ratio>& computed) {
    const std::string text = detail::rounded_or_na(computed);
    if (published == nullptr) {
      if (computed) push(row, column, "N/A", text);
      return;
    }
    if (!computed || detail::thousandths(published) != detail::thousandths(text)) {
      push(row, column, published, text);
    }
  };
  const std::size_t rows = std::min(chain.size(), table.rows.size());
  for (std::size_t i = 0; i < rows; ++i) {
    const Row& r = table.rows[i];
    const SetProfile& p = chain.steps[i].profile;
    integer(i, "|A_i+A_i|", r.sums, p.sum_count);
    integer(i, "|A_i-A_i|", r.diffs, p.diff_count);
    integer(i, "Cardinality", r.card, p.cardinality);
    integer(i, "Diameter", r.diam, p.diameter);
    decimal(i, "|A_i|/|A_{i-1}|", r.card_ratio, chain.card_ratio(i));
    decimal(i, "D(A_i)/D(A_{i-1})", r.diam_ratio, chain.diam_ratio(i));
    decimal(i, "Density", r.density, p.density);
  }
  return out;
}

}  // namespace sumdiff::reference
