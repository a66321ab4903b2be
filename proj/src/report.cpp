#include "ktds/report.hpp"

#include "ktds/error.hpp"
#include "ktds/graph_expr.hpp"

namespace ktds {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("report: missing field '") + name + "'", 0);
  return j.at(name);
}

template <typename T>
T get(const json& j, const char* name) {
  try {
    return field(j, name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: bad field '") + name + "': " + e.what(), 0);
  }
}

}  // namespace

json to_json(const RunReport& report) {
  return json{{"schema_version", report.schema_version},
              {"command", report.command},
              {"command_line", report.command_line},
              {"input", report.input},
              {"result", report.result},
              {"wall_seconds", report.wall_seconds},
              {"exit_code", report.exit_code}};
}

RunReport run_report_from_json(const json& j) {
  RunReport r;
  r.schema_version = get<int>(j, "schema_version");
  if (r.schema_version != kSchemaVersion) {
    throw ParseError("report: unsupported schema_version " + std::to_string(r.schema_version), 0);
  }
  r.command = get<std::string>(j, "command");
  r.command_line = get<std::string>(j, "command_line");
  r.input = field(j, "input");
  r.result = field(j, "result");
  r.wall_seconds = get<double>(j, "wall_seconds");
  r.exit_code = get<int>(j, "exit_code");
  return r;
}

json to_json(const VertexSet& s) { return s.indices(); }

VertexSet vertex_set_from_json(const json& j, std::size_t universe) {
  if (!j.is_array()) throw ParseError("report: vertex set must be an array", 0);
  VertexSet s(universe);
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError("report: vertex ids must be nonnegative integers", 0);
    const auto id = v.get<std::size_t>();
    if (id >= universe) throw ParseError("report: vertex id " + std::to_string(id) + " out of range", 0);
    s.insert(id);
  }
  return s;
}

json to_json(const DominationResult& r) {
  return json{{"value", r.value},
              {"certificate", to_json(r.certificate)},
              {"kind", kind_name(r.kind)},
              {"k", r.k},
              {"order", r.certificate.universe()},
              {"nodes", r.stats.nodes}};
}

json to_json(const PackingResult& r) {
  return json{{"value", r.value},
              {"certificate", to_json(r.certificate)},
              {"kind", kind_name(r.kind)},
              {"order", r.certificate.universe()},
              {"nodes", r.stats.nodes}};
}

json to_json(const ZeroOneMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string line;
    for (std::size_t j = 0; j < m.cols(); ++j) line += m.at(i, j) ? '#' : '.';
    rows.push_back(line);
  }
  return json{{"rows", rows}, {"hex", m.to_hex()}, {"ones", m.ones()}};
}

ZeroOneMatrix matrix_from_json(const json& j) {
  const auto hex = get<std::string>(j, "hex");
  ZeroOneMatrix m = ZeroOneMatrix::from_hex(hex);
  if (j.contains("rows")) {
    std::string text;
    for (const auto& row : j.at("rows")) text += row.get<std::string>() + "\n";
    if (!(ZeroOneMatrix::from_text(text) == m)) throw ParseError("report: matrix rows and hex disagree", 0);
  }
  return m;
}

json to_json(const BoundReport& r) {
  json parts = json::array();
  for (const auto& p : r.parts) {
    json part{{"label", p.label}, {"statement", p.statement}, {"applicable", p.applicable}};
    if (p.applicable) {
      part["lhs"] = p.lhs;
      part["rhs"] = p.rhs;
      part["holds"] = p.holds;
    }
    parts.push_back(std::move(part));
  }
  const BoundPart& head = r.headline();
  json out{{"bound_id", bound_name(r.bound_id)},
           {"k", r.k},
           {"applicable", r.applicable()},
           {"holds", r.holds()},
           {"witnesses", r.witnesses},
           {"parts", parts}};
  if (head.applicable) {
    out["lhs"] = head.lhs;
    out["rhs"] = head.rhs;
  }
  return out;
}

BoundReport bound_report_from_json(const json& j) {
  BoundReport r;
  const auto name = get<std::string>(j, "bound_id");
  const auto id = parse_bound_id(name);
  if (!id) throw ParseError("report: unknown bound_id '" + name + "'", 0);
  r.bound_id = *id;
  r.k = get<int>(j, "k");
  r.witnesses = get<Witnesses>(j, "witnesses");
  for (const auto& p : field(j, "parts")) {
    BoundPart part;
    part.label = get<std::string>(p, "label");
    part.statement = get<std::string>(p, "statement");
    part.applicable = get<bool>(p, "applicable");
    if (part.applicable) {
      part.lhs = get<std::int64_t>(p, "lhs");
      part.rhs = get<std::int64_t>(p, "rhs");
      part.holds = get<bool>(p, "holds");
    }
    r.parts.push_back(std::move(part));
  }
  return r;
}

}  // namespace ktds

namespace ktds {

namespace {

CheckOutcome fail(std::string message) { return {false, std::move(message)}; }

CheckOutcome check_gamma(const RunReport& r) {
  const Graph g = parse_graph_expr(get<std::string>(r.input, "graph"));
  const int k = get<int>(r.result, "k");
  const auto kind_text = get<std::string>(r.result, "kind");
  const DominationKind kind = kind_text == "closed" ? DominationKind::closed : DominationKind::total;
  const VertexSet s = vertex_set_from_json(field(r.result, "certificate"), g.order());
  if (static_cast<int>(s.size()) != get<int>(r.result, "value")) return fail("certificate size differs from value");
  if (!dominates(g, s, k, kind)) return fail("certificate is not a dominating set of the required kind");
  return {true, "certificate verifies"};
}

CheckOutcome check_matrix(const json& cell, int k, std::size_t n, std::size_t m) {
  const ZeroOneMatrix mat = matrix_from_json(field(cell, "matrix"));
  if (mat.rows() != n || mat.cols() != m) return fail("matrix has the wrong dimensions");
  if (mat.ones() != get<int>(cell, "value")) return fail("matrix ones count differs from value");
  if (!is_ktds_matrix(mat, k)) return fail("matrix violates the kappa bound");
  return {true, "matrix verifies"};
}

CheckOutcome check_rook(const RunReport& r) {
  if (!r.result.contains("matrix")) return {true, "no certificate to check"};
  return check_matrix(r.result, get<int>(r.input, "k"), get<std::size_t>(r.input, "n"), get<std::size_t>(r.input, "m"));
}

CheckOutcome check_verify(const RunReport& r) {
  const BoundReport b = bound_report_from_json(r.result);
  if (!witnesses_consistent(b)) return fail("bound sides do not follow from the witnesses");
  if (b.applicable() && !b.holds()) return fail("bound is violated");
  return {true, "bound report is consistent"};
}

CheckOutcome check_table(const RunReport& r) {
  const int k = get<int>(r.input, "k");
  std::size_t checked = 0;
  for (const auto& cell : field(r.result, "cells")) {
    if (!cell.contains("matrix")) continue;
    const auto outcome = check_matrix(cell, k, get<std::size_t>(cell, "n"), get<std::size_t>(cell, "m"));
    if (!outcome.ok) {
      return fail("cell " + std::to_string(get<int>(cell, "n")) + "x" + std::to_string(get<int>(cell, "m")) + ": " +
                  outcome.message);
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " matrices verify"};
}

}  // namespace

CheckOutcome check_run_report(const RunReport& report) {
  if (report.result.contains("error")) return fail("report records an error: " + report.result["error"].dump());
  if (report.command == "gamma") return check_gamma(report);
  if (report.command == "rook") return check_rook(report);
  if (report.command == "verify") return check_verify(report);
  if (report.command == "table") return check_table(report);
  return fail("cannot check reports of command '" + report.command + "'");
}

}  // namespace ktds
