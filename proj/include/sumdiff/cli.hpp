#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure or
// broken chain, 2 usage or precondition error.

#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sumdiff/chains.hpp"
#include "sumdiff/io.hpp"
#include "sumdiff/reference.hpp"
#include "sumdiff/report.hpp"
#include "sumdiff/search.hpp"

namespace sumdiff {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

namespace cli {

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline json read_json(const std::string& path_or_literal) {
  const auto first = path_or_literal.find_first_not_of(" \t\r\n");
  const bool literal = first != std::string::npos &&
                       (path_or_literal[first] == '{' || path_or_literal[first] == '[');
  const std::string text = literal ? path_or_literal : read_text(path_or_literal);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw usage_error(std::string("malformed JSON: ") + e.what());
  }
}

inline Method method_from_cli_name(const std::string& name) {
  if (name == "fill1") return Method::fill1;
  if (name == "fill2") return Method::fill2;
  if (name == "nonfill") return Method::nonfill_explicit;
  if (name == "thm31" || name == "fringe") return Method::nonfill_fringe;
  throw usage_error("unknown method " + name);
}

// Smallest m >= n for which the fringe base exists.
inline std::int64_t first_suitable_m(const IntegerSet& left, const IntegerSet& right, std::int64_t n,
                                     ConditionMode mode) {
  for (std::int64_t m = n; m <= 4 * n + 3; ++m) {
    try {
      (void)fringe_base(left, right, n, m, mode);
      return m;
    } catch (const precondition_error&) {
    }
  }
  throw precondition_error("a suitable m exists in [n, 4n+3]");
}

inline void print_verification(std::ostream& out, const VerificationReport& r) {
  for (const CheckOutcome& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << "verification: " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

inline void print_search(std::ostream& out, const SearchReport& r) {
  out << r.kind << " over " << r.domain << '\n';
  out << "total=" << r.total << " mstd=" << r.mstd_count << " mdts=" << r.mdts_count
      << " balanced=" << r.balanced_count << '\n';
  if (r.min_mstd_diameter) {
    out << "min MSTD diameter: " << *r.min_mstd_diameter << '\n';
    for (const auto& w : r.min_diameter_witnesses) out << "  " << to_string(w) << '\n';
  }
  if (r.min_mstd_cardinality) {
    out << "min MSTD cardinality: " << *r.min_mstd_cardinality << '\n';
    for (const auto& w : r.min_cardinality_witnesses) out << "  " << to_string(w) << '\n';
  }
  if (r.mstd_fraction) {
    out << std::setprecision(6) << std::fixed << "MSTD fraction: " << *r.mstd_fraction << " (95% CI "
        << *r.ci_low << ", " << *r.ci_high << "), seed " << *r.seed << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

}  // namespace cli

inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-dominated and difference-dominated integer sets", "sumdiff"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_set;
  auto* analyze = app.add_subcommand("analyze", "Profile one set");
  analyze->add_option("set", analyze_set, "Set literal, e.g. 0,2,3,4,7,11,12,14")->required();

  // chain
  std::string method_name = "nonfill";
  std::optional<std::string> seed_text, left_text, right_text;
  std::optional<std::int64_t> n_opt, m_opt;
  std::string mode_name = "strict";
  std::string p_rule = "minimize-n";
  std::int64_t steps = 7;
  bool verify_flag = false;
  std::string format_name = "ascii";
  std::string save_path;
  auto* chain = app.add_subcommand("chain", "Build a nested alternating chain");
  chain->add_option("--method", method_name, "fill1 | fill2 | nonfill | thm31 (alias fringe)")
      ->capture_default_str();
  chain->add_option("--seed-set", seed_text, "FILL1 MSTD seed");
  chain->add_option("--L", left_text, "Left fringe set");
  chain->add_option("--R", right_text, "Right fringe set");
  chain->add_option("--n", n_opt, "Fringe width");
  chain->add_option("--m", m_opt, "Middle interval end (thm31)");
  chain->add_option("--mode", mode_name, "strict | generalized (thm31)")->capture_default_str();
  chain->add_option("--p-rule", p_rule, "minimize-n | smallest (fill1)")->capture_default_str();
  chain->add_option("--steps", steps, "Number of sets")->capture_default_str();
  chain->add_flag("--verify", verify_flag, "Verify the chain with the independent oracle");
  chain->add_option("--format", format_name, "ascii | csv | json")->capture_default_str();
  chain->add_option("--save", save_path, "Write the chain record as JSON");

  // verify
  std::string verify_path;
  bool force_no_fill_in = false;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Verify a saved chain");
  verify->add_option("chain", verify_path, "Chain JSON file")->required();
  verify->add_flag("--no-fill-in", force_no_fill_in, "Check the no-fill-in invariant regardless of method");
  verify->add_flag("--json", verify_json, "JSON report");

  // table
  std::string table_path;
  std::string table_format = "ascii";
  auto* table = app.add_subcommand("table", "Render a saved chain as a table");
  table->add_option("chain", table_path, "Chain JSON file")->required();
  table->add_option("--format", table_format, "ascii | csv | json")->capture_default_str();

  // growth
  std::int64_t growth_steps = 7;
  auto* growth = app.add_subcommand("growth", "Growth summary of the reference chains");
  growth->add_option("--steps", growth_steps, "Steps per chain")->capture_default_str();

  // construct
  std::string construct_input;
  auto* construct = app.add_subcommand("construct", "Build one construction from a JSON parameter bundle");
  construct->add_option("params", construct_input, "JSON literal or file")->required();

  // search
  unsigned workers = 1;
  bool search_json = false;
  auto* search = app.add_subcommand("search", "Exhaustive and sampled searches");
  search->require_subcommand(1);
  search->add_option("--workers", workers, "Worker threads, 0 for all cores")->capture_default_str();
  search->add_flag("--json", search_json, "JSON report");
  std::int64_t diameter_max = 14;
  auto* s_diam = search->add_subcommand("diameter", "All subsets of [0,d] with 0 in the set, d <= D");
  s_diam->add_option("--max", diameter_max, "Largest diameter")->capture_default_str();
  std::int64_t card_dmax = 24;
  std::int64_t card_max = 7;
  std::uint64_t budget = kDefaultScanBudget;
  auto* s_card = search->add_subcommand("cardinality", "Sets of bounded cardinality and diameter");
  s_card->add_option("--d-max", card_dmax, "Largest diameter")->capture_default_str();
  s_card->add_option("--card-max", card_max, "Largest cardinality")->capture_default_str();
  s_card->add_option("--budget", budget, "Maximum number of sets")->capture_default_str();
  std::int64_t sample_n = 30;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  auto* s_sample = search->add_subcommand("sample", "Estimate the MSTD proportion of subsets of [1,n]");
  s_sample->add_option("--n", sample_n, "Universe size")->capture_default_str();
  s_sample->add_option("--samples", samples, "Number of samples")->capture_default_str();
  s_sample->add_option("--seed", seed, "Seed")->capture_default_str();
  std::int64_t seeds_n = 10;
  auto* s_seeds = search->add_subcommand("seeds", "P_n splits usable as FILL2 seeds");
  s_seeds->add_option("--n", seeds_n, "n")->capture_default_str();

  for (auto* sub : {s_diam, s_card, s_sample, s_seeds}) {
    sub->add_option("--workers", workers, "Worker threads, 0 for all cores");
    sub->add_flag("--json", search_json, "JSON report");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const IntegerSet a = parse_set(analyze_set);
      if (a.empty()) throw precondition_error("set is nonempty");
      const SetProfile p = profile(a);
      out << to_string(p.classification) << " sums=" << p.sum_count << " diffs=" << p.diff_count << '\n';
      out << "card=" << p.cardinality << " diam=" << p.diameter
          << " density=" << reference::detail::rounded_or_na(p.density) << '\n';
      if (auto c = symmetry_center(a)) out << "symmetric about " << *c << " / 2\n";
      return kExitOk;
    }

    if (chain->parsed()) {
      if (steps < 1) throw cli::usage_error("--steps must be at least 1");
      const TableFormat format = table_format_from_string(format_name);
      MethodConfig config;
      config.method = cli::method_from_cli_name(method_name);
      switch (config.method) {
        case Method::fill1:
          config.seed = seed_text ? parse_set(*seed_text) : reference::conway_set();
          if (p_rule == "minimize-n") {
            config.fill1.p_rule = PRule::minimize_n;
          } else if (p_rule == "smallest") {
            config.fill1.p_rule = PRule::smallest;
          } else {
            throw cli::usage_error("unknown --p-rule " + p_rule);
          }
          break;
        case Method::fill2:
          config.left = left_text ? parse_set(*left_text) : reference::fill2_example_left();
          config.right = right_text ? parse_set(*right_text) : reference::fill2_example_right();
          config.n = n_opt.value_or(10);
          break;
        case Method::nonfill_explicit: break;
        case Method::nonfill_fringe:
          config.mode = condition_mode_from_string(mode_name);
          config.left = left_text ? parse_set(*left_text) : IntegerSet{0, 1, 2, 5, 8};
          config.right = right_text ? parse_set(*right_text) : IntegerSet{0, 1, 3, 4, 8};
          config.n = n_opt.value_or(8);
          if (m_opt) {
            config.m = *m_opt;
          } else if (!left_text && !right_text && !n_opt) {
            config.m = 10;
          } else {
            config.m = cli::first_suitable_m(config.left, config.right, config.n, config.mode);
          }
          break;
      }
      const Checks checks = verify_flag ? Checks::on : kDefaultChecks;
      const ChainRecord record = build_chain(config, static_cast<std::size_t>(steps), checks);
      if (!save_path.empty()) {
        std::ofstream file(save_path);
        if (!file) throw cli::usage_error("cannot write " + save_path);
        file << chain_to_json(record).dump(2) << '\n';
      }
      std::optional<VerificationReport> report;
      if (verify_flag) report = verify_chain(record);
      if (format == TableFormat::json) {
        json j = json::parse(emit_table(record, format));
        if (report) j["verification"] = verification_to_json(*report);
        out << j.dump(2) << '\n';
      } else {
        out << emit_table(record, format);
        if (report) {
          std::ostringstream text;
          cli::print_verification(text, *report);
          if (format == TableFormat::csv) {
            std::istringstream lines(text.str());
            for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
          } else {
            out << text.str();
          }
        }
      }
      return report && !report->passed() ? kExitFailed : kExitOk;
    }

    if (verify->parsed()) {
      const ChainRecord record = chain_from_json(cli::read_json(verify_path));
      const VerificationReport report = verify_chain(record, {force_no_fill_in});
      if (verify_json) {
        out << verification_to_json(report).dump(2) << '\n';
      } else {
        cli::print_verification(out, report);
      }
      return report.passed() ? kExitOk : kExitFailed;
    }

    if (table->parsed()) {
      const ChainRecord record = chain_from_json(cli::read_json(table_path));
      out << emit_table(record, table_format_from_string(table_format));
      return kExitOk;
    }

    if (growth->parsed()) {
      if (growth_steps < 5) throw precondition_error("each chain has at least 5 steps");
      const auto n = static_cast<std::size_t>(growth_steps);
      const std::vector<ChainRecord> chains{
          fill1_chain(reference::conway_set(), n),
          fill2_chain(reference::fill2_example_left(), reference::fill2_example_right(), 10, n),
          nonfill_chain(n)};
      out << emit_growth_summary(chains);
      return kExitOk;
    }

    if (construct->parsed()) {
      const ConstructionRequest req = request_from_json(cli::read_json(construct_input));
      const IntegerSet a = build(req, Checks::on);
      const SetProfile p = profile(a);
      out << to_string(a) << '\n';
      out << to_string(p.classification) << " sums=" << p.sum_count << " diffs=" << p.diff_count
          << " card=" << p.cardinality << " diam=" << p.diameter << '\n';
      return kExitOk;
    }

    if (search->parsed()) {
      SearchOptions options;
      options.workers = workers;
      if (s_seeds->parsed()) {
        const auto seeds = find_fill2_seeds(seeds_n, options);
        if (search_json) {
          out << seeds_to_json(seeds).dump(2) << '\n';
        } else {
          out << seeds.size() << " splits for n=" << seeds_n << '\n';
          for (const auto& s : seeds) out << "L=" << to_string(s.left) << " R=" << to_string(s.right) << '\n';
        }
        return kExitOk;
      }
      SearchReport report;
      if (s_diam->parsed()) {
        report = exhaustive_by_diameter(diameter_max, options);
      } else if (s_card->parsed()) {
        report = min_cardinality_scan(card_dmax, card_max, options, budget);
      } else {
        report = sample_mstd_proportion(sample_n, samples, seed, options);
      }
      if (search_json) {
        out << search_to_json(report).dump(2) << '\n';
      } else {
        cli::print_search(out, report);
      }
      return kExitOk;
    }
  } catch (const cli::usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const parse_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const precondition_error& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const resource_limit_error& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "bad JSON document: " << e.what() << '\n';
    return kExitUsage;
  } catch (const chain_break_error& e) {
    err << "chain broken at step " << e.step() << ": " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace sumdiff
