// Command-line front end: analyze, table, mgsets, maxmin, bounds, census, conjecture.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 budget exceeded
// (partial output is still printed), 4 internal cross-check failure.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "mincw/bounds.hpp"
#include "mincw/census.hpp"
#include "mincw/codewords.hpp"
#include "mincw/conjecture.hpp"
#include "mincw/gf2.hpp"
#include "mincw/mgsets.hpp"
#include "mincw/optimize.hpp"
#include "mincw/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMismatch = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "text";
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  std::string path;
  int n = 0;
  int k = 0;
  int t = 0;
  int n_max = 15;
  int t_cap = 4;
  int k_min = 4;
  int k_max = 30;
  bool grid = false;
  bool exact_length = false;
  std::string conjecture;
  std::string mode = "auto";
};

mincw::SearchOptions search_options(const Config& c) {
  mincw::SearchOptions o;
  if (c.budget) o.budget = *c.budget;
  o.threads = c.threads;
  return o;
}

void emit(const Config& c, const mincw::Json& json, const std::string& text) {
  if (c.format == "json") {
    std::cout << json.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

void require_format(const Config& c, bool csv_allowed) {
  if (c.format == "csv" && !csv_allowed) throw UsageError("--format csv is only available for table and bounds --grid");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

int run_analyze(const Config& c) {
  require_format(c, false);
  const auto code = mincw::read_matrix_file(c.path);
  const auto analysis = mincw::analyze_code(code, c.budget.value_or(mincw::kDefaultSubsetBudget));
  emit(c, mincw::to_json(analysis), mincw::to_text(analysis));
  if (!analysis.disagreements.empty()) {
    std::cerr << "error: internal cross-check failed\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int run_table(const Config& c) {
  require(c.n_max >= 1 && c.n_max <= mincw::kMaxLength, "--nmax must be in 1..64");
  require(c.t_cap >= 0 && c.t_cap <= mincw::kMaxCatalogT, "--tcap must be in 0..5");
  const auto table = mincw::table(c.n_max, c.t_cap, search_options(c));
  if (c.format == "csv") {
    std::cout << mincw::table_csv(table);
  } else {
    emit(c, mincw::to_json(table), mincw::table_text(table));
  }
  for (const auto& cell : table.cells) {
    if (cell.result && !cell.result->exact) return kExitBudget;
  }
  return kExitOk;
}

int run_mgsets(const Config& c) {
  require_format(c, false);
  require(c.t >= 1 && c.t <= mincw::kMaxCatalogT, "--t must be in 1..5");
  const auto catalog = mincw::build_catalog(c.t);
  emit(c, mincw::to_json(catalog), mincw::to_text(catalog));
  return kExitOk;
}

int run_maxmin(const Config& c) {
  require_format(c, false);
  require(c.k >= 1 && c.n >= c.k, "need 1 <= --k <= --n");
  const auto result = mincw::maxmin(c.n, c.k, search_options(c));
  emit(c, mincw::to_json(result), mincw::to_text(result));
  return result.exact ? kExitOk : kExitBudget;
}

int run_bounds(const Config& c) {
  const auto options = search_options(c);
  if (c.grid) {
    require(c.n_max >= 1 && c.n_max <= mincw::kMaxLength, "--nmax must be in 1..64");
    std::vector<mincw::BoundsReport> reports;
    for (int n = 1; n <= c.n_max; ++n) {
      for (int k = 1; k <= n; ++k) reports.push_back(mincw::bounds_report(n, k, options));
    }
    if (c.format == "csv") {
      std::cout << mincw::bounds_grid_csv(reports);
    } else if (c.format == "json") {
      mincw::Json all = mincw::Json::array();
      for (const auto& r : reports) all.push_back(mincw::to_json(r));
      std::cout << all.dump(2) << '\n';
    } else {
      std::cout << mincw::bounds_grid_text(reports);
    }
    return kExitOk;
  }
  require_format(c, false);
  require(c.k >= 1 && c.n >= c.k, "need 1 <= --k <= --n");
  const auto report = mincw::bounds_report(c.n, c.k, options);
  emit(c, mincw::to_json(report), mincw::to_text(report));
  return report.exact && !report.exact->exact ? kExitBudget : kExitOk;
}

int run_census(const Config& c) {
  require_format(c, false);
  require(c.k >= 1 && c.k <= mincw::kCensusMaxK, "--k must be in 1..5");
  require(c.n >= c.k, "need --n >= --k");
  const auto options = search_options(c);
  const auto result = c.exact_length ? mincw::census_max(c.n, c.k, options) : mincw::census_max_folded(c.n, c.k, options);
  emit(c, mincw::to_json(result), mincw::to_text(result));
  return kExitOk;
}

int run_conjecture(const Config& c) {
  require_format(c, false);
  const auto options = search_options(c);
  if (c.conjecture == "t3") {
    mincw::ConjectureMode mode = mincw::ConjectureMode::Auto;
    if (c.mode == "exhaustive") {
      mode = mincw::ConjectureMode::Exhaustive;
    } else if (c.mode == "local-search") {
      mode = mincw::ConjectureMode::LocalSearch;
    }
    const auto report = mincw::check_conjecture_t3(c.k_min, c.k_max, mode, c.seed, options);
    emit(c, mincw::to_json(report), mincw::to_text(report));
    for (const auto& row : report.rows) {
      if (row.verdict == mincw::Verdict::Inconclusive) return kExitBudget;
    }
    return kExitOk;
  }
  const auto report = mincw::check_conjecture_leading(c.t, c.k_min, c.k_max, options);
  emit(c, mincw::to_json(report), mincw::to_text(report));
  return report.exact ? kExitOk : kExitBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal codewords of binary linear codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;

  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--budget", c.budget, "Work limit (search leaves, column sets or subsets)");
  app.add_option("--seed", c.seed, "Seed for randomized searches");
  app.add_option("--threads", c.threads, "Worker threads, 0 for all cores");

  auto* analyze = app.add_subcommand("analyze", "Count the minimal codewords of a generator matrix file");
  analyze->add_option("path", c.path, "Matrix file, one row of 0/1 characters per line")->required();

  auto* table = app.add_subcommand("table", "Table of M_2(n, k)");
  table->add_option("--nmax", c.n_max, "Largest n");
  table->add_option("--tcap", c.t_cap, "Largest n - k filled by the formula search");

  auto* mgsets = app.add_subcommand("mgsets", "Minimal generating sets of F_2^t");
  mgsets->add_option("--t", c.t, "Dimension t")->required();

  auto* maxmin = app.add_subcommand("maxmin", "Exact M_2(n, k) for n - k <= 5");
  maxmin->add_option("--n", c.n, "Length")->required();
  maxmin->add_option("--k", c.k, "Dimension")->required();

  auto* bounds = app.add_subcommand("bounds", "Upper and lower bounds on M_2(n, k)");
  bounds->add_option("--n", c.n, "Length");
  bounds->add_option("--k", c.k, "Dimension");
  bounds->add_flag("--grid", c.grid, "All 1 <= k <= n <= nmax");
  bounds->add_option("--nmax", c.n_max, "Largest n for --grid");

  auto* census = app.add_subcommand("census", "Exhaustive scan of projective codes, k <= 5");
  census->add_option("--n", c.n, "Length")->required();
  census->add_option("--k", c.k, "Dimension")->required();
  census->add_flag("--exact-length", c.exact_length, "Only codes with exactly n distinct columns");

  auto* conjecture = app.add_subcommand("conjecture", "Check a conjecture on a range of k");
  conjecture->add_option("name", c.conjecture, "t3 or leading")->required()->check(CLI::IsMember({"t3", "leading"}));
  conjecture->add_option("--kmin", c.k_min, "Smallest k");
  conjecture->add_option("--kmax", c.k_max, "Largest k");
  conjecture->add_option("--t", c.t, "t for the leading-term conjecture (2 or 3)");
  conjecture->add_option("--mode", c.mode, "Search mode for t3")
      ->check(CLI::IsMember({"auto", "exhaustive", "local-search"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(c);
    if (*table) return run_table(c);
    if (*mgsets) return run_mgsets(c);
    if (*maxmin) return run_maxmin(c);
    if (*bounds) {
      if (!c.grid) require(bounds->count("--n") > 0 && bounds->count("--k") > 0, "bounds needs --n and --k, or --grid");
      return run_bounds(c);
    }
    if (*census) return run_census(c);
    if (*conjecture) {
      if (c.conjecture == "leading") require(conjecture->count("--t") > 0, "conjecture leading needs --t");
      return run_conjecture(c);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mincw::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const mincw::InvalidCodeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const mincw::BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
