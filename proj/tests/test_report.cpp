#include <doctest.h>

#include "ktds/domination.hpp"
#include "ktds/error.hpp"
#include "ktds/graph_expr.hpp"
#include "ktds/report.hpp"

using namespace ktds;
using nlohmann::json;

namespace {

RunReport gamma_report(const std::string& expr, int k) {
  const Graph g = parse_graph_expr(expr);
  const auto r = gamma_bnb(g, k, DominationKind::total);
  RunReport report;
  report.command = "gamma";
  report.command_line = "gamma --graph " + expr;
  report.input = {{"graph", expr}, {"k", k}};
  report.result = to_json(r);
  return report;
}

}  // namespace

TEST_CASE("run reports round trip") {
  RunReport report = gamma_report("K3xK4", 2);
  report.wall_seconds = 0.25;
  const json j = to_json(report);
  CHECK(j.at("schema_version") == kSchemaVersion);
  CHECK(run_report_from_json(j) == report);
  CHECK(run_report_from_json(json::parse(j.dump())) == report);

  json bad = j;
  bad["schema_version"] = 99;
  CHECK_THROWS_AS(run_report_from_json(bad), ParseError);
  bad = j;
  bad.erase("command");
  CHECK_THROWS_AS(run_report_from_json(bad), ParseError);
}

TEST_CASE("vertex sets and matrices round trip") {
  const VertexSet s(10, {0, 3, 9});
  CHECK(vertex_set_from_json(to_json(s), 10) == s);
  CHECK_THROWS_AS(vertex_set_from_json(json::array({10}), 10), ParseError);

  const auto m = ZeroOneMatrix::from_text(".#..\n####\n.#..");
  const json mj = to_json(m);
  CHECK(mj.at("ones") == 6);
  CHECK(mj.at("hex") == m.to_hex());
  CHECK(matrix_from_json(mj) == m);
  json bad = mj;
  bad["rows"][0] = "#...";
  CHECK_THROWS_AS(matrix_from_json(bad), ParseError);
}

TEST_CASE("bound reports round trip") {
  for (BoundId id : kAllBounds) {
    const auto r = check_bound(id, cycle(5), complete(2), 1);
    const auto back = bound_report_from_json(json::parse(to_json(r).dump()));
    CHECK(back.bound_id == r.bound_id);
    CHECK(back.k == r.k);
    CHECK(back.witnesses == r.witnesses);
    CHECK(back.parts.size() == r.parts.size());
    CHECK(witnesses_consistent(back));
  }
}

TEST_CASE("checking reports") {
  RunReport report = gamma_report("P", 3);
  CHECK(check_run_report(report).ok);

  auto smaller = report;
  auto cert = smaller.result["certificate"];
  cert.erase(cert.begin());
  smaller.result["certificate"] = cert;
  CHECK_FALSE(check_run_report(smaller).ok);

  auto wrong_value = report;
  wrong_value.result["value"] = 9;
  CHECK_FALSE(check_run_report(wrong_value).ok);

  RunReport rook;
  rook.command = "rook";
  rook.input = {{"n", 3}, {"m", 4}, {"k", 2}};
  rook.result = {{"value", 6}, {"matrix", to_json(ZeroOneMatrix::from_text(".#..\n####\n.#.."))}};
  CHECK(check_run_report(rook).ok);
  rook.result["matrix"] = to_json(ZeroOneMatrix::from_text(".#..\n###.\n.#.."));
  rook.result["value"] = 5;
  CHECK_FALSE(check_run_report(rook).ok);

  RunReport verify;
  verify.command = "verify";
  verify.result = to_json(check_bound(BoundId::degree_lb, petersen(), complete(1), 2));
  CHECK(check_run_report(verify).ok);
  verify.result["witnesses"]["gamma"] = 3;
  CHECK_FALSE(check_run_report(verify).ok);

  RunReport errored;
  errored.command = "gamma";
  errored.result = {{"error", "boom"}};
  CHECK_FALSE(check_run_report(errored).ok);
  errored.command = "unknown";
  errored.result = json::object();
  CHECK_FALSE(check_run_report(errored).ok);
}
