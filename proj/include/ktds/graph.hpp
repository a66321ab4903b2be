#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ktds {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..order()-1.
///
/// Immutable once built. Neighbor lists are sorted; a dense bit row per vertex is kept
/// alongside so the solvers can intersect neighborhoods with vertex sets word-wise.
/// Minimum and maximum degree are computed at construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate and reversed edges are merged; self-loops and
  /// out-of-range endpoints throw InvalidArgument.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const std::uint32_t> neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::size_t min_degree() const noexcept { return min_degree_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  bool has_edge(std::size_t u, std::size_t v) const;

  /// Bit row of N(v); words_per_row() words, bit u set iff uv is an edge.
  std::span<const std::uint64_t> neighbor_bits(std::size_t v) const;
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  /// Edges as (u, v) with u < v, in increasing lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;  // nonincreasing

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_per_row_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t min_degree_ = 0;
  std::size_t max_degree_ = 0;
};

/// A vertex (g, h) of a Cartesian product G□H, flattened g-major: id = g*|V(H)| + h.
struct ProductVertex {
  std::size_t g_index = 0;
  std::size_t h_index = 0;

  std::size_t flatten(std::size_t h_order) const noexcept { return g_index * h_order + h_index; }
  static ProductVertex unflatten(std::size_t id, std::size_t h_order) noexcept {
    return {id / h_order, id % h_order};
  }
  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph petersen();

/// G□H with g-major vertex numbering (see ProductVertex).
Graph cartesian_product(const Graph& g, const Graph& h);

/// The G* construction: every vertex of G gets `pendants_per_vertex` leaves and every edge
/// uv becomes a path u-a-b-v. Vertex layout: original vertices 0..n-1, then the pendants of
/// vertex v at n + v*p + t, then the two interior vertices of the e-th edge (edges() order)
/// at n + n*p + 2e (next to u) and n + n*p + 2e + 1 (next to v).
Graph star_subdivide(const Graph& g, std::size_t pendants_per_vertex = 1);

/// True iff E(g) ⊆ E(g_super); both graphs must have the same order.
bool is_spanning_subgraph(const Graph& g, const Graph& g_super);

/// True iff every connected component is a single edge (K_2).
bool is_disjoint_union_of_k2(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace ktds
