#include "zagraph/cli.hpp"

#include "zagraph/error.hpp"
#include "zagraph/export.hpp"
#include "zagraph/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace zag {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::invalid_argument, "cannot open '" + path + "' for writing");
  f << text;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  return Side::two_sided;
}

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-annihilator graphs of finite rings", "zagraph"};
  app.require_subcommand(1);
  app.fallthrough();

  long long budget_ms = 10000;
  std::size_t max_table_order = kDefaultTableOrder;
  app.add_option("--budget-ms", budget_ms, "Time budget for exact clique/colouring searches")->check(CLI::PositiveNumber);
  app.add_option("--max-table-order", max_table_order, "Largest ring order whose laws are tabulated");

  std::string expr;
  std::string graph = "za", side = "left", format, out_path, report_path;
  bool timings = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Build a graph of a ring and compute its invariants");
  analyze_cmd->add_option("expr", expr, "Ring expression, e.g. \"Z2 x GF(4)\"")->required();
  analyze_cmd->add_option("--graph", graph, "Graph construction")->check(CLI::IsMember({"za", "coann", "zd"}));
  analyze_cmd->add_option("--side", side, "Annihilator side for noncommutative rings")
      ->check(CLI::IsMember({"left", "right", "twosided"}));
  analyze_cmd->add_option("--export", format, "Export format instead of the text summary")
      ->check(CLI::IsMember({"dot", "json"}));
  analyze_cmd->add_option("--out", out_path, "Write output to FILE");

  auto* verify_cmd = app.add_subcommand("verify", "Run every applicable theorem check for one ring");
  verify_cmd->add_option("expr", expr, "Ring expression")->required();
  verify_cmd->add_option("--report", report_path, "Write the JSON report to FILE");
  verify_cmd->add_flag("--timings", timings, "Include per-check timings");

  std::size_t max_order = 0;
  std::vector<std::string> families;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the theorem suite over the generated ring catalog");
  sweep_cmd->add_option("--max-order", max_order, "Largest ring order in the catalog")->required();
  sweep_cmd->add_option("--families", families, "Comma-separated subset of zn,gf,products,local,matrix")
      ->delimiter(',')
      ->check(CLI::IsMember({"zn", "gf", "products", "local", "matrix"}));
  sweep_cmd->add_option("--report", report_path, "Write the JSON report to FILE");
  sweep_cmd->add_flag("--timings", timings, "Include per-check timings");

  std::vector<std::string> argv_store{"zagraph"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << one_line(e.what()) << '\n';
    return kUsage;
  }

  const RingLimits limits{max_table_order, kDefaultMaxOrder};
  InvariantOptions inv_opts;
  inv_opts.budget = std::chrono::milliseconds(budget_ms);

  try {
    if (analyze_cmd->parsed()) {
      const auto ring = elaborate(parse_ring_expr(expr), limits);
      SimpleGraph g;
      if (graph == "za") g = za_graph(ring, parse_side(side));
      else if (graph == "coann") g = coann_ideal_graph(ring);
      else g = zero_divisor_graph(ring);
      const auto report = compute_invariants(g, inv_opts);
      write_output(format.empty() ? invariant_text(g, report) : export_graph(g, report, format), out_path, out);
      return kOk;
    }

    if (verify_cmd->parsed()) {
      std::vector<RingCatalogEntry> one;
      one.push_back(make_entry(parse_ring_expr(expr), limits));
      const auto report = run_suite(one, SuiteOptions{inv_opts, 1});
      out << report_text(report, timings);
      if (!report_path.empty()) write_output(report_json(report, timings).dump(2) + "\n", report_path, out);
      return report.ok() ? kOk : kCheckFailed;
    }

    CatalogLimits cat;
    cat.max_order = max_order;
    if (!families.empty()) {
      cat.families.clear();
      for (const auto& f : families) cat.families.insert(*parse_family(f));
    }
    const auto catalog = build_catalog(cat, limits);
    const auto report = run_suite(catalog, SuiteOptions{inv_opts, 0});
    out << report_text(report, timings);
    if (!report_path.empty()) write_output(report_json(report, timings).dump(2) + "\n", report_path, out);
    return report.ok() ? kOk : kCheckFailed;
  } catch (const Error& e) {
    err << "error[" << errc_name(e.code()) << "]: " << one_line(e.what()) << '\n';
    return kUsage;
  }
}

}  // namespace zag
