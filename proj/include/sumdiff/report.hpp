#pragma once

// Table and growth-summary rendering.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "sumdiff/chains.hpp"
#include "sumdiff/io.hpp"
#include "sumdiff/reference.hpp"

namespace sumdiff {

enum class TableFormat { ascii, csv, json };

inline TableFormat table_format_from_string(std::string_view s) {
  if (s == "ascii") return TableFormat::ascii;
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  throw precondition_error("format is ascii, csv or json", std::string(s));
}

inline constexpr std::array<std::string_view, 8> kTableColumns{
    "Set",      "|A_i+A_i|",       "|A_i-A_i|",         "Cardinality",
    "Diameter", "|A_i|/|A_{i-1}|", "D(A_i)/D(A_{i-1})", "Density"};

struct TableRow {
  std::string label;
  std::int64_t sums;
  std::int64_t diffs;
  std::int64_t card;
  std::int64_t diam;
  std::string card_ratio;  // rounded to 3 decimals or "N/A"
  std::string diam_ratio;
  std::string density;

  [[nodiscard]] std::array<std::string, 8> cells() const {
    return {label, std::to_string(sums), std::to_string(diffs), std::to_string(card),
            std::to_string(diam), card_ratio, diam_ratio, density};
  }
};

inline std::vector<TableRow> table_rows(const ChainRecord& chain) {
  std::vector<TableRow> rows;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const SetProfile& p = chain.steps[i].profile;
    rows.push_back({"A_" + std::to_string(i + 1), p.sum_count, p.diff_count, p.cardinality, p.diameter,
                    reference::detail::rounded_or_na(chain.card_ratio(i)),
                    reference::detail::rounded_or_na(chain.diam_ratio(i)),
                    reference::detail::rounded_or_na(p.density)});
  }
  return rows;
}

struct DensityFooter {
  std::optional<Ratio> analytic;   // closed-form limit, when the method has one
  std::optional<Ratio> last_mstd;  // density of the last MSTD step

  /// The number printed as the limiting density.
  [[nodiscard]] std::string value() const {
    if (analytic) return analytic->rounded(3);
    if (last_mstd) return last_mstd->rounded(3);
    return "N/A";
  }

  [[nodiscard]] std::string text() const {
    std::string out = "Limiting MSTD density: " + value();
    if (analytic && last_mstd) out += " (last MSTD step: " + last_mstd->rounded(3) + ")";
    if (!analytic && last_mstd) out += " (last MSTD step)";
    return out;
  }
};

inline DensityFooter density_footer(const ChainRecord& chain) {
  DensityFooter f;
  f.analytic = chain.density_limit;
  for (const ChainStep& s : chain.steps) {
    if (s.profile.classification == Classification::mstd && s.profile.density) f.last_mstd = s.profile.density;
  }
  return f;
}

/// Notes on cells that differ from a matching published table.
inline std::vector<std::string> reference_notes(const ChainRecord& chain) {
  std::vector<std::string> notes;
  const reference::Table* table = reference::find(chain.config);
  if (table == nullptr) return notes;
  for (const auto& m : reference::compare(chain, *table)) {
    notes.push_back("A_" + std::to_string(m.row + 1) + " " + m.column + ": computed " + m.computed +
                    ", published " + m.published +
                    (m.known ? " (known discrepancy: " + m.note + ")" : " (UNEXPECTED)"));
  }
  return notes;
}

inline std::string emit_table(const ChainRecord& chain, TableFormat format) {
  if (chain.steps.empty()) throw precondition_error("chain is nonempty");
  const auto rows = table_rows(chain);
  const DensityFooter footer = density_footer(chain);
  const auto notes = reference_notes(chain);
  std::ostringstream out;
  switch (format) {
    case TableFormat::ascii: {
      std::array<std::size_t, 8> width{};
      for (std::size_t c = 0; c < 8; ++c) width[c] = kTableColumns[c].size();
      for (const auto& r : rows) {
        const auto cells = r.cells();
        for (std::size_t c = 0; c < 8; ++c) width[c] = std::max(width[c], cells[c].size());
      }
      auto line = [&](const auto& cells) {
        for (std::size_t c = 0; c < 8; ++c) {
          const std::string cell(cells[c]);
          out << (c == 0 ? "| " : " | ") << cell << std::string(width[c] - cell.size(), ' ');
        }
        out << " |\n";
      };
      auto rule = [&] {
        for (std::size_t c = 0; c < 8; ++c) out << (c == 0 ? "+-" : "-+-") << std::string(width[c], '-');
        out << "-+\n";
      };
      out << method_tag(chain.method()) << '\n';
      rule();
      line(kTableColumns);
      rule();
      for (const auto& r : rows) line(r.cells());
      rule();
      out << footer.text() << '\n';
      for (const auto& n : notes) out << "note: " << n << '\n';
      break;
    }
    case TableFormat::csv: {
      for (std::size_t c = 0; c < 8; ++c) out << (c ? "," : "") << '"' << kTableColumns[c] << '"';
      out << '\n';
      for (const auto& r : rows) {
        const auto cells = r.cells();
        for (std::size_t c = 0; c < 8; ++c) out << (c ? "," : "") << cells[c];
        out << '\n';
      }
      out << "# " << footer.text() << '\n';
      for (const auto& n : notes) out << "# note: " << n << '\n';
      break;
    }
    case TableFormat::json: {
      json j;
      j["method"] = std::string(method_tag(chain.method()));
      j["columns"] = json::array();
      for (auto c : kTableColumns) j["columns"].push_back(std::string(c));
      j["rows"] = json::array();
      for (const auto& r : rows) {
        j["rows"].push_back({{"Set", r.label},
                             {"|A_i+A_i|", r.sums},
                             {"|A_i-A_i|", r.diffs},
                             {"Cardinality", r.card},
                             {"Diameter", r.diam},
                             {"|A_i|/|A_{i-1}|", r.card_ratio},
                             {"D(A_i)/D(A_{i-1})", r.diam_ratio},
                             {"Density", r.density}});
      }
      j["limiting_mstd_density"] = footer.value();
      j["last_mstd_density"] = footer.last_mstd ? json(footer.last_mstd->rounded(3)) : json(nullptr);
      j["notes"] = notes;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Growth between consecutive MSTD steps.

enum class GrowthType { linear, exponential, irregular };

constexpr std::string_view to_string(GrowthType t) noexcept {
  switch (t) {
    case GrowthType::linear: return "Linear";
    case GrowthType::exponential: return "Exponential";
    case GrowthType::irregular: return "Irregular";
  }
  return "Irregular";
}

struct GrowthSummary {
  Method method;
  std::int64_t first_card = 0;
  std::int64_t first_diam = 0;
  GrowthType type = GrowthType::irregular;
  std::optional<std::int64_t> card_step;  // constant increments (linear)
  std::optional<std::int64_t> diam_step;
  std::optional<Ratio> min_card_ratio;  // smallest MSTD-to-MSTD ratios (exponential)
  std::optional<Ratio> min_diam_ratio;

  /// Largest integer f with every ratio > f.
  [[nodiscard]] static std::int64_t exceeded_factor(const Ratio& r) {
    return (r.num - 1) / r.den;
  }

  [[nodiscard]] std::string card_rate_text() const {
    if (card_step) return std::to_string(*card_step);
    if (min_card_ratio) return ">" + std::to_string(exceeded_factor(*min_card_ratio)) + "*|A_{2i-1}|";
    return "-";
  }
  [[nodiscard]] std::string diam_rate_text() const {
    if (diam_step) return std::to_string(*diam_step);
    if (min_diam_ratio) return ">" + std::to_string(exceeded_factor(*min_diam_ratio)) + "*Diam(A_{2i-1})";
    return "-";
  }
};

inline GrowthSummary summarize_growth(const ChainRecord& chain) {
  if (chain.size() < 5) throw precondition_error("chain has at least 5 steps");
  GrowthSummary g;
  g.method = chain.method();
  g.first_card = chain.steps.front().profile.cardinality;
  g.first_diam = chain.steps.front().profile.diameter;
  std::vector<const SetProfile*> mstd;
  for (const ChainStep& s : chain.steps) {
    if (s.profile.classification == Classification::mstd) mstd.push_back(&s.profile);
  }
  if (mstd.size() < 3) throw precondition_error("chain has at least 3 MSTD steps");
  std::vector<std::int64_t> dcard;
  std::vector<std::int64_t> ddiam;
  for (std::size_t i = 1; i < mstd.size(); ++i) {
    dcard.push_back(mstd[i]->cardinality - mstd[i - 1]->cardinality);
    ddiam.push_back(mstd[i]->diameter - mstd[i - 1]->diameter);
  }
  // The first increment leaves the seed, whose placement is arbitrary; with
  // three or more increments the rate is read from the rest.
  const std::size_t skip = ddiam.size() >= 3 ? 1 : 0;
  auto constant = [skip](const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(skip), v.end(),
                       [&](std::int64_t x) { return x == v.back(); });
  };
  if (constant(ddiam)) {
    g.type = GrowthType::linear;
    g.diam_step = ddiam.back();
    if (constant(dcard)) g.card_step = dcard.back();
    return g;
  }
  auto min_ratio = [&](auto field) {
    Ratio best{mstd[1]->*field, mstd[0]->*field};
    for (std::size_t i = 1; i < mstd.size(); ++i) {
      const Ratio r{mstd[i]->*field, mstd[i - 1]->*field};
      if (static_cast<__int128>(r.num) * best.den < static_cast<__int128>(best.num) * r.den) best = r;
    }
    return best;
  };
  g.min_card_ratio = min_ratio(&SetProfile::cardinality);
  g.min_diam_ratio = min_ratio(&SetProfile::diameter);
  const bool increments_grow = std::is_sorted(ddiam.begin(), ddiam.end()) && ddiam.front() > 0;
  if (increments_grow && g.min_diam_ratio->num > g.min_diam_ratio->den &&
      g.min_card_ratio->num > g.min_card_ratio->den) {
    g.type = GrowthType::exponential;
  }
  return g;
}

inline std::string method_display_name(Method m) {
  switch (m) {
    case Method::fill1: return "Filling in 1";
    case Method::fill2: return "Filling in 2";
    case Method::nonfill_explicit: return "Non-filling in";
    case Method::nonfill_fringe: return "Non-filling in (fringe)";
  }
  return "";
}

inline std::string emit_growth_summary(std::span<const ChainRecord> chains) {
  std::vector<GrowthSummary> rows;
  for (const ChainRecord& c : chains) rows.push_back(summarize_growth(c));
  std::ostringstream out;
  out << "Method | |A_1| | A_1 Diam. | Card. Rate | Diam. Rate | Type\n";
  for (const GrowthSummary& g : rows) {
    out << method_display_name(g.method) << " | " << g.first_card << " | " << g.first_diam << " | "
        << g.card_rate_text() << " | " << g.diam_rate_text() << " | " << to_string(g.type) << '\n';
  }
  return out.str();
}

}  // namespace sumdiff
