// ktds: exact k-tuple total domination, packing and rook's-graph tools.
//
// Prints one JSON object per run (see RunReport); --pretty prints a human summary instead.
// Exit codes: 0 ok (or bound inapplicable), 1 usage/parse/size cap, 2 infeasible or
// undefined instance, 3 bound violated or report check failed.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ktds/bounds.hpp"
#include "ktds/error.hpp"
#include "ktds/graph_expr.hpp"
#include "ktds/kernels.hpp"
#include "ktds/report.hpp"
#include "ktds/rook.hpp"

namespace {

using nlohmann::json;
using namespace ktds;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitAlarm = 3;

struct Options {
  bool pretty = false;
  unsigned threads = 1;
  std::string isa;

  std::string graph;
  std::string h_graph = "K1";
  int k = 1;
  bool closed = false;
  bool canonical = false;
  std::string method = "bnb";

  std::size_t n = 0;
  std::size_t m = 0;
  std::string mode = "formula";

  std::string bound;
  std::size_t max_n = 0;
  std::size_t max_m = 0;
  std::string report_file;
};

unsigned default_threads() {
  if (const char* env = std::getenv("KTDS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Thrown for instances that have no answer (infeasible or outside the formula's domain).
struct Undefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string pretty_set(const json& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", " : "") + ids[i].dump();
  return out + "}";
}

std::string pretty_matrix(const json& m) {
  std::string out;
  for (const auto& row : m.at("rows")) out += "  " + row.get<std::string>() + "\n";
  return out;
}

// --- commands ------------------------------------------------------------------------

json run_gamma(const Options& o, json& input) {
  const DominationKind kind = o.closed ? DominationKind::closed : DominationKind::total;
  input = {{"graph", o.graph}, {"k", o.k}, {"kind", kind_name(kind)}, {"method", o.method}, {"canonical", o.canonical}};
  const Graph g = parse_graph_expr(o.graph);
  DominationResult r;
  if (o.method == "brute") {
    r = gamma_bruteforce(g, o.k, kind);
  } else {
    SolverOptions so;
    so.canonical = o.canonical;
    so.threads = o.threads;
    r = gamma_bnb(g, o.k, kind, so);
  }
  json out = to_json(r);
  out["vertices"] = g.order();
  out["edges"] = g.size();
  return out;
}

json run_rook(const Options& o, json& input) {
  input = {{"n", o.n}, {"m", o.m}, {"k", o.k}, {"mode", o.mode}, {"canonical", o.canonical}};
  if (o.n < 1 || o.m < 1) throw InvalidArgument("--n and --m must be >= 1");
  if (o.mode == "formula") {
    if (o.k == 2) {
      const Gamma2Case c = gamma2_rook_formula(o.n, o.m);
      if (!c.value) throw Undefined("no 2-tuple total dominating set for this (n, m)");
      return {{"value", *c.value}, {"case", case_name(c.case_id)}};
    }
    if (const auto v = gamma_rook_manycols(o.n, o.m, o.k)) return {{"value", *v}, {"case", "many_columns"}};
    if (static_cast<long>(o.n + o.m) - 2 < o.k) throw Undefined("no k-tuple total dominating set: n + m - 2 < k");
    throw InvalidArgument("no closed formula for this (n, m, k); use --mode exact");
  }
  if (o.mode == "certificate" && o.k == 2) {
    if (!gamma2_rook_formula(o.n, o.m).value) throw Undefined("no 2-tuple total dominating set for this (n, m)");
    ZeroOneMatrix mat = build_min_2tds(o.n, o.m);
    if (o.canonical) {
      mat = canonicalize(mat);
      if (mat.rows() != o.n) mat = mat.transpose();
    }
    return {{"value", mat.ones()}, {"matrix", to_json(mat)}, {"verified", is_ktds_matrix(mat, 2)}};
  }
  if (o.mode != "exact" && o.mode != "certificate") throw InvalidArgument("--mode must be formula, exact or certificate");
  RookOptions ro;
  ro.search.canonical = o.canonical;
  ro.search.threads = o.threads;
  const DominationResult r = gamma_rook_exact(o.n, o.m, o.k, ro);
  const ZeroOneMatrix mat = set_to_matrix(r.certificate, o.n, o.m);
  return {{"value", r.value}, {"matrix", to_json(mat)}, {"verified", is_ktds_matrix(mat, o.k)}};
}

json run_verify(const Options& o, json& input, int& exit_code) {
  const auto id = parse_bound_id(o.bound);
  if (!id) throw InvalidArgument("unknown bound '" + o.bound + "'");
  input = {{"bound", o.bound}, {"g", o.graph}, {"h", o.h_graph}, {"k", o.k}};
  const Graph g = parse_graph_expr(o.graph);
  const Graph h = parse_graph_expr(o.h_graph);
  SolverCache cache(o.threads);
  const BoundReport b = check_bound(*id, g, h, o.k, &cache);
  if (b.applicable() && !b.holds()) exit_code = kExitAlarm;
  return to_json(b);
}

json run_table(const Options& o, json& input, int& exit_code) {
  input = {{"k", o.k}, {"max_n", o.max_n}, {"max_m", o.max_m}};
  if (o.k < 1) throw InvalidArgument("--k must be >= 1");
  json cells = json::array();
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    for (std::size_t m = n; m <= o.max_m; ++m) {
      json cell{{"n", n}, {"m", m}};
      try {
        RookOptions ro;
        ro.search.canonical = true;
        const DominationResult r = gamma_rook_exact(n, m, o.k, ro);
        cell["value"] = r.value;
        cell["status"] = "ok";
        cell["matrix"] = to_json(set_to_matrix(r.certificate, n, m));
      } catch (const Infeasible&) {
        cell["value"] = nullptr;
        cell["status"] = "infeasible";
      } catch (const SizeCapExceeded& e) {
        cell["value"] = nullptr;
        cell["status"] = "cap";
        cell["error"] = e.what();
        exit_code = kExitUsage;
      }
      cells.push_back(std::move(cell));
    }
  }
  return {{"cells", cells}};
}

json run_check(const Options& o, json& input, int& exit_code) {
  input = {{"report", o.report_file}};
  std::string text;
  if (o.report_file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.report_file);
    if (!in) throw Error("cannot open report file '" + o.report_file + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what(), e.byte);
  }
  const RunReport report = run_report_from_json(j);
  const CheckOutcome outcome = check_run_report(report);
  if (!outcome.ok) exit_code = kExitAlarm;
  return {{"checked_command", report.command}, {"ok", outcome.ok}, {"message", outcome.message}};
}

// --- pretty printing -----------------------------------------------------------------

void print_pretty(const RunReport& r, std::ostream& out) {
  const json& res = r.result;
  if (res.contains("error")) {
    out << "error: " << res["error"].get<std::string>() << "\n";
    return;
  }
  if (r.command == "gamma") {
    out << "gamma_x" << res["k"] << (res["kind"] == "total" ? ",t(" : "(")
        << r.input["graph"].get<std::string>() << ") = " << res["value"] << "\n";
    out << "certificate: " << pretty_set(res["certificate"]) << "\n";
  } else if (r.command == "rook") {
    out << "K" << r.input["n"] << " x K" << r.input["m"] << ", k=" << r.input["k"] << ": " << res["value"];
    if (res.contains("case")) out << " (" << res["case"].get<std::string>() << ")";
    out << "\n";
    if (res.contains("matrix")) out << pretty_matrix(res["matrix"]);
  } else if (r.command == "verify") {
    out << res["bound_id"].get<std::string>() << " (k=" << res["k"] << ")\n";
    for (const auto& p : res["parts"]) {
      out << "  " << p["statement"].get<std::string>() << ": ";
      if (!p["applicable"].get<bool>()) {
        out << "inapplicable\n";
      } else {
        out << p["lhs"] << " <= " << p["rhs"] << (p["holds"].get<bool>() ? "  holds" : "  VIOLATED") << "\n";
      }
    }
    out << "  witnesses:";
    for (const auto& [name, value] : res["witnesses"].items()) out << " " << name << "=" << value;
    out << "\n";
  } else if (r.command == "table") {
    const auto max_n = r.input["max_n"].get<std::size_t>();
    const auto max_m = r.input["max_m"].get<std::size_t>();
    auto pad = [](std::string text, std::size_t width) {
      return std::string(width > text.size() ? width - text.size() : 0, ' ') + text;
    };
    out << pad("k=" + r.input["k"].dump() + "  n\\m", 10);
    for (std::size_t m = 1; m <= max_m; ++m) out << pad(std::to_string(m), 4);
    out << "\n";
    auto it = res["cells"].begin();
    for (std::size_t n = 1; n <= max_n; ++n) {
      out << pad(std::to_string(n), 10);
      for (std::size_t m = 1; m <= max_m; ++m) {
        std::string cell;
        if (m >= n) {
          const json& c = *it++;
          cell = c["status"] == "ok" ? c["value"].dump() : (c["status"] == "infeasible" ? "-" : "?");
        }
        out << pad(cell, 4);
      }
      out << "\n";
    }
  } else if (r.command == "check") {
    out << (res["ok"].get<bool>() ? "ok: " : "FAILED: ") << res["message"].get<std::string>() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact k-tuple total domination, packing and rook's-graph tools"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.threads = default_threads();
  app.add_flag("--pretty", o.pretty, "Human-readable output instead of JSON");
  app.add_option("--threads", o.threads, "Solver worker threads (default: $KTDS_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--isa", o.isa, "Force kernel variant: scalar or avx2")->check(CLI::IsMember({"scalar", "avx2"}));

  auto* gamma = app.add_subcommand("gamma", "Minimum k-tuple (total) dominating set of a graph expression");
  gamma->add_option("--graph,-g", o.graph, "Graph expression, e.g. K3xK4, P, star(C5,1), @edges.txt")->required();
  gamma->add_option("--k", o.k, "Multiplicity k >= 1")->check(CLI::PositiveNumber);
  gamma->add_flag("--closed", o.closed, "k-tuple domination (closed neighborhoods) instead of total");
  gamma->add_flag("--canonical", o.canonical, "Return the lexicographically least optimum");
  gamma->add_option("--method", o.method, "bnb or brute")->check(CLI::IsMember({"bnb", "brute"}));

  auto* rook = app.add_subcommand("rook", "Rook's graph K_n x K_m");
  rook->add_option("--n", o.n, "Rows")->required();
  rook->add_option("--m", o.m, "Columns")->required();
  rook->add_option("--k", o.k, "Multiplicity k >= 1")->check(CLI::PositiveNumber);
  rook->add_option("--mode", o.mode, "formula, exact or certificate")
      ->check(CLI::IsMember({"formula", "exact", "certificate"}));
  rook->add_flag("--canonical", o.canonical, "Canonical certificate matrix");

  auto* verify = app.add_subcommand("verify", "Check one bound on G, H (and G x H)");
  verify->set_help_flag("--help", "Print this help message and exit");
  std::string bound_help = "Bound id:";
  for (BoundId id : kAllBounds) bound_help += std::string(" ") + bound_name(id);
  verify->add_option("--bound", o.bound, bound_help)->required();
  verify->add_option("--g", o.graph, "Graph expression for G")->required();
  verify->add_option("--h", o.h_graph, "Graph expression for H (default K1)");
  verify->add_option("--k", o.k, "Multiplicity k >= 1")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Optimal values and certificates for K_n x K_m, n <= m");
  table->add_option("--k", o.k, "Multiplicity k >= 1")->required()->check(CLI::PositiveNumber);
  table->add_option("--max-n", o.max_n, "Largest n")->required();
  table->add_option("--max-m", o.max_m, "Largest m")->required();

  auto* check = app.add_subcommand("check", "Re-verify the certificates in a JSON report");
  check->add_option("report", o.report_file, "Report file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  RunReport report;
  for (int i = 1; i < argc; ++i) report.command_line += (i > 1 ? " " : "") + std::string(argv[i]);
  report.command = app.get_subcommands().front()->get_name();
  int exit_code = kExitOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (o.isa == "scalar") kernels::set_active_isa(kernels::Isa::scalar);
    if (o.isa == "avx2") kernels::set_active_isa(kernels::Isa::avx2);
    if (*gamma) report.result = run_gamma(o, report.input);
    if (*rook) report.result = run_rook(o, report.input);
    if (*verify) report.result = run_verify(o, report.input, exit_code);
    if (*table) report.result = run_table(o, report.input, exit_code);
    if (*check) report.result = run_check(o, report.input, exit_code);
  } catch (const Infeasible& e) {
    report.result = {{"error", e.what()}};
    exit_code = kExitInfeasible;
  } catch (const Undefined& e) {
    report.result = {{"error", e.what()}};
    exit_code = kExitInfeasible;
  } catch (const std::exception& e) {
    report.result = {{"error", e.what()}};
    exit_code = kExitUsage;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.exit_code = exit_code;

  if (report.result.contains("error")) std::cerr << "ktds: " << report.result["error"].get<std::string>() << "\n";
  if (o.pretty) {
    print_pretty(report, std::cout);
  } else {
    std::cout << to_json(report).dump(2) << "\n";
  }
  return exit_code;
}
