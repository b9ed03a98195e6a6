// schurforge: exact computation of the rectangle invariant g(m, n) by
// independent routes, p-adic divisibility scans, Schubert pullback
// classes, and the transition-matrix tables behind them.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurforge/arith.hpp"
#include "schurforge/cache.hpp"
#include "schurforge/chow.hpp"
#include "schurforge/conjectures.hpp"
#include "schurforge/parallel.hpp"
#include "schurforge/partition.hpp"
#include "schurforge/segre.hpp"
#include "schurforge/transition.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace schurforge;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  std::size_t budget = TermBudget::kDefaultMaxTerms;
  int threads = 0; // 0 = auto
  std::string output = "table";
  std::string cache_dir;

  TermBudget term_budget() const { return TermBudget{.max_terms = budget}; }
};

std::optional<std::filesystem::path> resolve_cache_file(const RunConfig& config) {
  std::filesystem::path dir;
  if (!config.cache_dir.empty()) {
    dir = config.cache_dir;
  } else if (const char* env = std::getenv("SCHURFORGE_CACHE"); env && *env) {
    dir = env;
  } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    dir = std::filesystem::path(xdg) / "schurforge";
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    dir = std::filesystem::path(home) / ".cache" / "schurforge";
  } else {
    return std::nullopt;
  }
  return dir / "schurforge.cache";
}

void warm_cache(const RunConfig& config) {
  auto file = resolve_cache_file(config);
  if (!file || !std::filesystem::exists(*file)) return;
  try {
    load_cache_file(*file);
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring cache: " << e.what() << "\n";
  }
}

void persist_cache(const RunConfig& config) {
  auto file = resolve_cache_file(config);
  if (!file) return;
  try {
    save_cache_file(*file);
  } catch (const std::exception& e) {
    std::cerr << "warning: could not save cache: " << e.what() << "\n";
  }
}

void append_run_ledger(const json& record) {
  std::ofstream out("runs.jsonl", std::ios::app);
  if (out) out << record.dump() << "\n";
}

std::string valuation_text(const Valuation& v) { return v.to_string(); }

json valuation_field(const Valuation& v) {
  if (v.is_infinite()) return "infinity";
  return v.amount();
}

void print_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

// ---- g ---------------------------------------------------------------

int run_g(const RunConfig& config, std::int64_t m, std::int64_t n, const std::string& route) {
  GInput input(m, n); // throws invalid_argument -> usage
  TermBudget budget = config.term_budget();
  int threads = resolve_threads(config.threads);

  bool two_rows_possible = (m == 2);
  if (route == "two-rows" && !two_rows_possible)
    throw CLI::ValidationError("--route two-rows requires m = 2");

  std::vector<RouteCheck> routes;
  int over_budget = 0;
  auto attempt = [&](const std::string& name, auto&& compute) {
    try {
      routes.push_back({name, compute(), true});
    } catch (const BudgetExceeded&) {
      ++over_budget;
    }
  };
  if (route == "auto" || route == "direct") attempt("direct", [&] { return g_direct(input, budget); });
  if (route == "auto" || route == "cauchy") attempt("cauchy", [&] { return g_cauchy(input, budget); });
  if ((route == "auto" && two_rows_possible) || route == "two-rows")
    attempt("two-rows", [&] { return g_two_rows((n - 2) / 2, threads); });

  if (routes.empty()) {
    std::cerr << "error: infeasible at desk scale: every requested route exceeded the term budget ("
              << over_budget << " attempted)\n";
    return kExitBudget;
  }

  const ExactInt& value = routes.front().value;
  bool agree = true;
  for (RouteCheck& rc : routes) {
    rc.agrees = (rc.value == value);
    agree = agree && rc.agrees;
  }

  json result;
  result["command"] = "g";
  result["params"] = {{"m", m}, {"n", n}, {"route", route}};
  result["value"] = decimal_string(value);
  json vals = json::object();
  for (std::uint64_t p : {2u, 3u, 5u})
    vals[std::to_string(p)] = valuation_field(val_p(value, p));
  result["valuations"] = vals;
  json checks = json::array();
  for (const RouteCheck& rc : routes)
    checks.push_back({{"route", rc.route}, {"value", decimal_string(rc.value)}, {"agrees", rc.agrees}});
  result["route_checks"] = checks;
  result["routes_agree"] = agree;
  if (over_budget > 0) result["routes_over_budget"] = over_budget;

  if (config.output == "json") {
    std::cout << result.dump(2) << "\n";
  } else if (config.output == "csv") {
    print_csv_row(std::cout, {"m", "n", "value", "val_2", "val_3", "val_5", "routes_agree"});
    print_csv_row(std::cout,
                  {std::to_string(m), std::to_string(n), decimal_string(value),
                   valuation_text(val_p(value, 2)), valuation_text(val_p(value, 3)),
                   valuation_text(val_p(value, 5)), agree ? "true" : "false"});
  } else {
    std::cout << "g(" << m << ", " << n << ") = " << decimal_string(value) << "\n";
    std::cout << "  val_2 = " << valuation_text(val_p(value, 2))
              << "  val_3 = " << valuation_text(val_p(value, 3))
              << "  val_5 = " << valuation_text(val_p(value, 5)) << "\n";
    std::cout << "  routes:";
    for (const RouteCheck& rc : routes)
      std::cout << " " << rc.route << "=" << decimal_string(rc.value);
    std::cout << (agree ? "  (agree)" : "  (DISAGREE)") << "\n";
  }
  return agree ? kExitOk : kExitViolated;
}

// ---- verify ----------------------------------------------------------

int run_verify(const RunConfig& config, const std::string& conjecture, std::uint64_t p,
               int e, int f) {
  TermBudget budget = config.term_budget();
  int threads = resolve_threads(config.threads);

  ValuationReport report = conjecture == "c2" ? verify_conj2(p, e, f, budget, threads)
                                              : termwise_scan(p, e, f, budget, threads);
  json j = report_to_json(report);
  append_run_ledger(j);

  if (config.output == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (config.output == "csv") {
    print_csv_row(std::cout, {"check", "p", "e", "f", "feasible", "total", "total_valuation",
                              "expected_valuation", "holds"});
    print_csv_row(std::cout, {report.check, std::to_string(p), std::to_string(e),
                              std::to_string(f), report.feasible ? "true" : "false",
                              decimal_string(report.total),
                              valuation_text(report.total_valuation),
                              std::to_string(f - e), report.holds ? "true" : "false"});
  } else {
    std::cout << "conjecture " << report.check << " at p=" << p << " e=" << e << " f=" << f << ": ";
    if (!report.feasible) {
      std::cout << report.infeasible_reason << "\n";
    } else {
      std::cout << (report.holds ? "holds" : "VIOLATED") << "\n";
      std::cout << "  total = " << decimal_string(report.total)
                << ", val_" << p << " = " << valuation_text(report.total_valuation)
                << " (expected " << f - e << ")\n";
      if (report.min_term_valuation)
        std::cout << "  min term valuation = " << valuation_text(*report.min_term_valuation)
                  << ", terms at min = " << decimal_string(*report.count_at_min)
                  << ", nonzero terms = " << decimal_string(*report.term_count) << "\n";
      for (const RouteCheck& rc : report.route_checks)
        std::cout << "  route " << rc.route << " = " << decimal_string(rc.value)
                  << (rc.agrees ? " (agrees)" : " (DISAGREES)") << "\n";
    }
  }
  if (!report.feasible) return kExitBudget;
  return report.holds ? kExitOk : kExitViolated;
}

// ---- scan ------------------------------------------------------------

int run_scan(const RunConfig& config, std::int64_t lmax) {
  int threads = resolve_threads(config.threads);
  json rows = json::array();
  for (std::int64_t ell = 1; ell <= lmax; ++ell) {
    ExactInt total = 0;
    Valuation min = Valuation::infinity();
    ExactInt at_min = 0;
    for (const SeptupleTerm& t : septuple_terms(ell, threads)) {
      total += t.value;
      if (t.valuation < min) {
        min = t.valuation;
        at_min = 1;
      } else if (t.valuation == min) {
        at_min += 1;
      }
    }
    std::int64_t expected = digit_sum(static_cast<std::uint64_t>(ell), 2);
    json row;
    row["ell"] = ell;
    row["g"] = decimal_string(total);
    row["val_2"] = valuation_field(val_p(total, 2));
    row["digit_sum"] = expected;
    row["min_term_valuation"] = valuation_field(min);
    row["count_at_min"] = decimal_string(at_min);
    row["min_count_parity"] = (at_min % 2 == 0) ? "even" : "odd";
    row["law_holds"] = (val_p(total, 2) == Valuation::finite(expected));
    rows.push_back(row);
  }
  json result;
  result["command"] = "scan";
  result["params"] = {{"lmax", lmax}};
  result["rows"] = rows;
  append_run_ledger(result);

  if (config.output == "json") {
    std::cout << result.dump(2) << "\n";
  } else if (config.output == "csv") {
    print_csv_row(std::cout, {"ell", "g", "val_2", "digit_sum", "min_term_valuation",
                              "count_at_min", "min_count_parity", "law_holds"});
    for (const auto& row : rows)
      print_csv_row(std::cout,
                    {row["ell"].dump(), row["g"].get<std::string>(), row["val_2"].dump(),
                     row["digit_sum"].dump(), row["min_term_valuation"].dump(),
                     row["count_at_min"].get<std::string>(),
                     row["min_count_parity"].get<std::string>(), row["law_holds"].dump()});
  } else {
    std::cout << "  ell  g(2, 2*ell+2)        val_2  v(ell)  min term val  parity of count at min\n";
    for (const auto& row : rows) {
      std::string g = row["g"].get<std::string>();
      std::cout << "  " << row["ell"] << "    " << g;
      for (std::size_t pad = g.size(); pad < 18; ++pad) std::cout << ' ';
      std::cout << "  " << row["val_2"] << "      " << row["digit_sum"] << "       "
                << row["min_term_valuation"] << "             "
                << row["min_count_parity"].get<std::string>() << "\n";
    }
  }
  return kExitOk;
}

// ---- pullback --------------------------------------------------------

json bichow_json(const BiChowClass& cls) {
  json terms = json::array();
  for (const auto& [label, coeff] : cls.terms())
    terms.push_back({{"first", label.first.to_string()},
                     {"second", label.second.to_string()},
                     {"coeff", decimal_string(coeff)}});
  return terms;
}

int run_pullback(const RunConfig& config, int m, int n) {
  if (m < 1 || n < 1 || m + n > 12)
    throw CLI::ValidationError("pullback supports 1 <= m, n with m + n <= 12");
  BiChowClass sum = segre_pullback_sum(m, n);
  BiChowClass det = segre_pullback_resultant(m, n);
  bool agree = sum.terms() == det.terms();
  ExactInt square_point = bipoint_coefficient(bichow_multiply(sum, sum));
  ExactInt expected = binomial(m + n, m);

  json result;
  result["command"] = "pullback";
  result["params"] = {{"m", m}, {"n", n}};
  result["closed_form"] = bichow_json(sum);
  result["resultant"] = bichow_json(det);
  result["routes_agree"] = agree;
  result["square_bipoint"] = decimal_string(square_point);
  result["box_partition_count"] = decimal_string(expected);
  result["bipoint_matches"] = (square_point == expected);

  if (config.output == "json") {
    std::cout << result.dump(2) << "\n";
  } else if (config.output == "csv") {
    print_csv_row(std::cout, {"first", "second", "coeff"});
    for (const auto& term : result["closed_form"])
      print_csv_row(std::cout, {term["first"].get<std::string>(),
                                term["second"].get<std::string>(),
                                term["coeff"].get<std::string>()});
  } else {
    std::cout << "pullback class on G(" << m << "," << m + n << ") x G(" << n << "," << m + n
              << "): " << sum.term_count() << " terms\n";
    for (const auto& [label, coeff] : sum.terms())
      std::cout << "  " << label.first.to_string() << " (x) " << label.second.to_string()
                << "  " << decimal_string(coeff) << "\n";
    std::cout << "resultant route " << (agree ? "agrees" : "DISAGREES") << "\n";
    std::cout << "square bipoint = " << decimal_string(square_point) << " vs binom("
              << m + n << "," << m << ") = " << decimal_string(expected)
              << ((square_point == expected) ? " (match)" : " (MISMATCH)") << "\n";
  }
  return (agree && square_point == expected) ? kExitOk : kExitViolated;
}

// ---- tables ----------------------------------------------------------

int run_tables(const RunConfig& config, std::int64_t weight, const std::string& which) {
  if (weight < 0 || weight > 16)
    throw CLI::ValidationError("tables supports weights 0..16");
  const WeightBlock& block = weight_block(weight);
  std::size_t size = block.labels.size();
  auto entry = [&](std::size_t i, std::size_t j) -> ExactInt {
    if (which == "kostka") return block.kostka_matrix[i][j];
    if (which == "mse") return m_se(block.labels[i], block.labels[j]);
    return m_es(block.labels[i], block.labels[j]);
  };

  json labels = json::array();
  for (const Partition& p : block.labels) labels.push_back(p.to_string());
  TransitionKind kind = which == "kostka" ? TransitionKind::kostka
                        : which == "mse"  ? TransitionKind::schur_to_elementary
                                          : TransitionKind::elementary_to_schur;
  json entries = json::array();
  for (const TransitionEntry& te : sparse_block_entries(kind, weight))
    entries.push_back({{"source", te.source.to_string()},
                       {"target", te.target.to_string()},
                       {"value", decimal_string(te.value)}});
  json result;
  result["command"] = "tables";
  result["params"] = {{"weight", weight}, {"matrix", which}};
  result["labels"] = labels;
  result["entries"] = entries;

  if (config.output == "json") {
    std::cout << result.dump(2) << "\n";
  } else if (config.output == "csv") {
    std::vector<std::string> header{""};
    for (const Partition& p : block.labels) header.push_back(p.to_string());
    print_csv_row(std::cout, header);
    for (std::size_t i = 0; i < size; ++i) {
      std::vector<std::string> row{block.labels[i].to_string()};
      for (std::size_t j = 0; j < size; ++j) row.push_back(decimal_string(entry(i, j)));
      print_csv_row(std::cout, row);
    }
  } else {
    std::cout << which << " block at weight " << weight << " (" << size << " partitions)\n";
    for (std::size_t i = 0; i < size; ++i) {
      std::cout << "  " << block.labels[i].to_string() << ":";
      for (std::size_t j = 0; j < size; ++j) std::cout << " " << decimal_string(entry(i, j));
      std::cout << "\n";
    }
  }
  return kExitOk;
}

// ---- cache -----------------------------------------------------------

int run_cache(const RunConfig& config, const std::string& action) {
  auto file = resolve_cache_file(config);
  if (!file) {
    std::cerr << "error: no cache directory could be resolved\n";
    return kExitUsage;
  }
  if (action == "clear") {
    std::error_code ec;
    bool existed = std::filesystem::remove(*file, ec);
    if (ec) {
      std::cerr << "error: " << ec.message() << "\n";
      return kExitUsage;
    }
    std::cout << (existed ? "cache cleared: " : "cache already empty: ") << file->string() << "\n";
    return kExitOk;
  }
  // inspect
  json result;
  result["command"] = "cache";
  result["path"] = file->string();
  if (std::filesystem::exists(*file)) {
    try {
      memo_clear();
      CacheStats stats = load_cache_file(*file);
      result["valid"] = true;
      result["lr_records"] = stats.lr_records;
      result["kostka_records"] = stats.kostka_records;
    } catch (const std::exception& e) {
      result["valid"] = false;
      result["error"] = e.what();
    }
  } else {
    result["valid"] = true;
    result["lr_records"] = 0;
    result["kostka_records"] = 0;
  }
  if (config.output == "json")
    std::cout << result.dump(2) << "\n";
  else
    std::cout << "cache file: " << result["path"].get<std::string>() << "\n"
              << "  LR records: " << result.value("lr_records", 0)
              << "  KOSTKA records: " << result.value("kostka_records", 0)
              << (result["valid"].get<bool>() ? "" : "  (INVALID: " + result.value("error", std::string()) + ")")
              << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"schurforge: exact rectangle-invariant computations over Schur and Chow rings"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags are accepted after the subcommand

  RunConfig config;
  app.add_option("--budget", config.budget, "term budget for ring computations")
      ->check(CLI::Range(static_cast<std::size_t>(1000), std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  app.add_option("--threads", config.threads, "worker threads (0 = logical cores)")
      ->capture_default_str();
  app.add_option("--output", config.output, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--cache-dir", config.cache_dir,
                 "cache directory (default: $SCHURFORGE_CACHE or ~/.cache/schurforge)");

  // g
  auto* cmd_g = app.add_subcommand("g", "evaluate g(m, n) and its small-prime valuations");
  std::int64_t g_m = 0, g_n = 0;
  std::string g_route = "auto";
  cmd_g->add_option("m", g_m, "subspace-side parameter")->required();
  cmd_g->add_option("n", g_n, "ambient-side parameter, a proper multiple of m")->required();
  cmd_g->add_option("--route", g_route, "evaluation route")
      ->check(CLI::IsMember({"auto", "direct", "cauchy", "two-rows"}));

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "check a divisibility conjecture instance");
  std::string conjecture;
  std::uint64_t v_p = 2;
  int v_e = 1, v_f = 2;
  cmd_verify->add_option("conjecture", conjecture, "which check: c2 or c5")
      ->required()
      ->check(CLI::IsMember({"c2", "c5"}));
  cmd_verify->add_option("--p", v_p, "prime")->required();
  cmd_verify->add_option("--e", v_e, "lower exponent")->required();
  cmd_verify->add_option("--f", v_f, "upper exponent")->required();

  // scan
  auto* cmd_scan = app.add_subcommand("scan", "tabulate the two-row valuation law");
  std::int64_t lmax = 1;
  cmd_scan->add_option("--lmax", lmax, "largest ell")->required()->check(CLI::Range(1, 16));

  // pullback
  auto* cmd_pullback = app.add_subcommand("pullback", "tensor-embedding pullback class, both routes");
  int pb_m = 1, pb_n = 1;
  cmd_pullback->add_option("m", pb_m)->required();
  cmd_pullback->add_option("n", pb_n)->required();

  // tables
  auto* cmd_tables = app.add_subcommand("tables", "dump a transition-matrix block");
  std::int64_t t_weight = 0;
  std::string t_matrix = "kostka";
  cmd_tables->add_option("--weight", t_weight, "weight of the block")->required();
  cmd_tables->add_option("--matrix", t_matrix, "which matrix")
      ->check(CLI::IsMember({"kostka", "mse", "mes"}));

  // cache
  auto* cmd_cache = app.add_subcommand("cache", "inspect or clear the coefficient cache");
  std::string cache_action;
  cmd_cache->add_option("action", cache_action, "inspect or clear")
      ->required()
      ->check(CLI::IsMember({"inspect", "clear"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!cmd_cache->parsed()) warm_cache(config);
    int rc = kExitOk;
    if (cmd_g->parsed()) rc = run_g(config, g_m, g_n, g_route);
    else if (cmd_verify->parsed()) rc = run_verify(config, conjecture, v_p, v_e, v_f);
    else if (cmd_scan->parsed()) rc = run_scan(config, lmax);
    else if (cmd_pullback->parsed()) rc = run_pullback(config, pb_m, pb_n);
    else if (cmd_tables->parsed()) rc = run_tables(config, t_weight, t_matrix);
    else if (cmd_cache->parsed()) return run_cache(config, cache_action);
    persist_cache(config);
    return rc;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: infeasible at desk scale: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
