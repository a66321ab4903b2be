#include "ktds/packing.hpp"

#include <bit>
#include <vector>

#include "ktds/error.hpp"

namespace ktds {

namespace {

bool neighborhoods_intersect(const Graph& g, std::size_t u, std::size_t v, PackingKind kind) {
  if (kind == PackingKind::closed && (u == v || g.has_edge(u, v))) return true;
  const auto a = g.neighbor_bits(u);
  const auto b = g.neighbor_bits(v);
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & b[w]) != 0) return true;
  }
  return false;
}

bool pairwise_disjoint(const Graph& g, const VertexSet& s, PackingKind kind) {
  if (s.universe() != g.order()) throw InvalidArgument("vertex set universe does not match graph order");
  const auto members = s.indices();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (neighborhoods_intersect(g, members[i], members[j], kind)) return false;
    }
  }
  return true;
}

}  // namespace

const char* kind_name(PackingKind kind) noexcept { return kind == PackingKind::closed ? "closed" : "open"; }

bool is_packing(const Graph& g, const VertexSet& s) { return pairwise_disjoint(g, s, PackingKind::closed); }
bool is_open_packing(const Graph& g, const VertexSet& s) { return pairwise_disjoint(g, s, PackingKind::open); }

Graph conflict_graph(const Graph& g, PackingKind kind) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (neighborhoods_intersect(g, u, v, kind)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges);
}

PackingResult max_packing(const Graph& g, PackingKind kind, unsigned threads) {
  const std::size_t n = g.order();
  if (n > kPackingCap) throw SizeCapExceeded("packing", n, kPackingCap);

  // S is a packing iff every neighborhood N[w] (or N(w)) holds at most one member of S,
  // i.e. the complement of S meets each of them in all but at most one vertex. A minimum
  // such complement is a maximum packing.
  CoverProblem problem;
  problem.items = n;
  for (std::size_t w = 0; w < n; ++w) {
    std::uint64_t nbhd = g.neighbor_bits(w)[0];
    if (kind == PackingKind::closed) nbhd |= std::uint64_t{1} << w;
    problem.sets.push_back(nbhd);
    problem.demand.push_back(std::popcount(nbhd) - 1);
  }
  // Among complements of equal size, the lexicographically greatest one leaves the
  // lexicographically least packing.
  CoverOptions options;
  options.tie_break = TieBreak::lex_greatest;
  options.threads = threads;
  const auto cover = solve_min_cover(problem, options);
  if (!cover) throw Error("packing: complement cover unexpectedly infeasible");

  PackingResult result;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  result.certificate = VertexSet::from_word(n, all & ~cover->chosen);
  result.value = static_cast<int>(n) - cover->value;
  result.kind = kind;
  result.stats = cover->stats;
  return result;
}

PackingResult packing_number(const Graph& g, unsigned threads) { return max_packing(g, PackingKind::closed, threads); }
PackingResult open_packing_number(const Graph& g, unsigned threads) {
  return max_packing(g, PackingKind::open, threads);
}

}  // namespace ktds
