#pragma once

// Finite-instance checks of the lower and upper bounds relating domination and packing
// numbers of G, H and G□H. Every side is computed by an exact solver; nothing is assumed.
//
// A report holds the solver values it used ("witnesses") and one or more parts, each an
// inequality lhs <= rhs with its own applicability. Parts are a pure function of the
// witnesses, so a serialized report can be re-evaluated without solving anything.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ktds/domination.hpp"
#include "ktds/graph.hpp"
#include "ktds/packing.hpp"

namespace ktds {

enum class BoundId {
  degree_lb,         // ceil(k n / max degree) <= gamma_k(G)
  packing_lb,        // k rho(G) <= k rho_open(G) <= gamma_k(G)
  vizing_like,       // rho(G) gamma_k(H) <= gamma_k(GxH); gamma_k(G) gamma_k(H) <= 2k gamma_k(GxH)
  packing_product,   // rho(G) rho(H) <= rho(GxH); k rho(G) rho(H) <= gamma_k(GxH)
  open_packing_sum,  // rho_open(G) + rho_open(H) - 1 <= rho_open(GxH), and k times that <= gamma_k(GxH)
  product_upper,     // gamma_k(GxH) <= gamma_k(G) |V(H)|
  rook_extremal,     // gamma_k(K_n x K_m) <= gamma_k(GxH)
  vizing,            // gamma(G) gamma(H) <= gamma(GxH), closed domination
};

inline constexpr BoundId kAllBounds[] = {BoundId::degree_lb,       BoundId::packing_lb,       BoundId::vizing_like,
                                         BoundId::packing_product, BoundId::open_packing_sum, BoundId::product_upper,
                                         BoundId::rook_extremal,   BoundId::vizing};

/// "degree-lb", "packing-lb", ...
const char* bound_name(BoundId id) noexcept;
std::optional<BoundId> parse_bound_id(std::string_view name);
/// True for bounds about a single graph (degree-lb, packing-lb); H is ignored.
bool is_single_graph_bound(BoundId id) noexcept;

using Witnesses = std::map<std::string, std::int64_t>;

struct BoundPart {
  std::string label;
  std::string statement;  // "lhs <= rhs" in words
  bool applicable = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = true;  // meaningful only when applicable

  friend bool operator==(const BoundPart&, const BoundPart&) = default;
};

struct BoundReport {
  BoundId bound_id = BoundId::degree_lb;
  int k = 1;
  Witnesses witnesses;
  std::vector<BoundPart> parts;

  bool applicable() const;
  /// All applicable parts hold.
  bool holds() const;
  /// Sides of the first applicable part, else of the first part.
  const BoundPart& headline() const;
};

/// Re-derives the parts from bound id and witnesses.
std::vector<BoundPart> evaluate_parts(BoundId id, const Witnesses& witnesses);
/// evaluate_parts(report) reproduces report.parts exactly.
bool witnesses_consistent(const BoundReport& report);

/// Memoizes exact solver values per labelled graph. Thread-safe.
class SolverCache {
 public:
  explicit SolverCache(unsigned threads = 1) : threads_(threads) {}

  int gamma(const Graph& g, int k, DominationKind kind);
  int rho(const Graph& g);
  int rho_open(const Graph& g);
  /// gamma_{k,t}(K_n x K_m).
  int gamma_rook(std::size_t n, std::size_t m, int k);
  /// G x H, built once per pair.
  const Graph& product(const Graph& g, const Graph& h);

  std::size_t entries() const;

 private:
  struct Key {
    std::size_t order;
    std::vector<Edge> edges;
    int quantity;
    int k;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  static Key key_of(const Graph& g, int quantity, int k);

  unsigned threads_;
  mutable std::mutex mutex_;
  std::map<Key, int> values_;
  std::map<std::pair<Key, Key>, std::unique_ptr<Graph>> products_;
};

BoundReport check_degree_lb(const Graph& g, int k, SolverCache* cache = nullptr);
BoundReport check_packing_lb(const Graph& g, int k, SolverCache* cache = nullptr);
BoundReport check_vizing_like(const Graph& g, const Graph& h, int k, SolverCache* cache = nullptr);
BoundReport check_packing_product(const Graph& g, const Graph& h, int k = 1, SolverCache* cache = nullptr);
BoundReport check_open_packing_sum(const Graph& g, const Graph& h, int k = 1, SolverCache* cache = nullptr);
BoundReport check_product_upper(const Graph& g, const Graph& h, int k, SolverCache* cache = nullptr);
BoundReport check_rook_extremal(const Graph& g, const Graph& h, int k, SolverCache* cache = nullptr);
BoundReport check_vizing_conjecture(const Graph& g, const Graph& h, SolverCache* cache = nullptr);

/// General form of the rook bound: G, H spanning subgraphs of G', H' with
/// min degree(G) + min degree(H) >= k give gamma_k(G'xH') <= gamma_k(GxH). Throws
/// PreconditionViolated when G (H) is not a spanning subgraph of G' (H').
BoundReport check_supergraph_extremal(const Graph& g, const Graph& h, const Graph& g_super, const Graph& h_super,
                                      int k, SolverCache* cache = nullptr);

/// Dispatch by id; single-graph bounds are applied to g.
BoundReport check_bound(BoundId id, const Graph& g, const Graph& h, int k, SolverCache* cache = nullptr);

}  // namespace ktds
