#pragma once

// JSON forms of solver results and the CLI's top-level run report.

#include <json.hpp>
#include <string>

#include "ktds/bounds.hpp"
#include "ktds/domination.hpp"
#include "ktds/packing.hpp"
#include "ktds/rook.hpp"

namespace ktds {

inline constexpr int kSchemaVersion = 1;

/// What the CLI prints: one object per run.
struct RunReport {
  int schema_version = kSchemaVersion;
  std::string command;        // subcommand name
  std::string command_line;   // arguments as given
  nlohmann::json input;       // parsed parameters
  nlohmann::json result;      // payload; shape depends on the command
  double wall_seconds = 0.0;
  int exit_code = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json to_json(const RunReport& report);
/// Throws ParseError on missing fields or an unsupported schema version.
RunReport run_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const nlohmann::json& j, std::size_t universe);

nlohmann::json to_json(const DominationResult& r);
nlohmann::json to_json(const PackingResult& r);
/// {"rows": [...text rows...], "hex": "...", "ones": n}
nlohmann::json to_json(const ZeroOneMatrix& m);
ZeroOneMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const nlohmann::json& j);

struct CheckOutcome {
  bool ok = false;
  std::string message;
};

/// Re-verifies whatever a run report certifies: domination certificates against the
/// graph rebuilt from the input expression, matrices against the kappa bound and their
/// claimed ones count, bound reports against their witnesses. Optimality is not re-proved.
CheckOutcome check_run_report(const RunReport& report);

}  // namespace ktds
