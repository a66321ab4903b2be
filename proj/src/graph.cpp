#include "ktds/graph.hpp"

#include <algorithm>
#include <limits>

#include "ktds/error.hpp"

namespace ktds {

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  if (order > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidArgument("graph order too large");
  }
  Graph g;
  g.adjacency_.assign(order, {});
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside 0.." + std::to_string(order) + "-1");
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(static_cast<std::uint32_t>(v));
    g.adjacency_[v].push_back(static_cast<std::uint32_t>(u));
  }
  std::size_t degree_sum = 0;
  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    degree_sum += row.size();
  }
  g.edge_count_ = degree_sum / 2;

  g.words_per_row_ = (order + 63) / 64;
  g.bits_.assign(order * g.words_per_row_, 0);
  for (std::size_t v = 0; v < order; ++v) {
    std::uint64_t* row = g.bits_.data() + v * g.words_per_row_;
    for (std::uint32_t u : g.adjacency_[v]) row[u / 64] |= std::uint64_t{1} << (u % 64);
  }

  if (order > 0) {
    auto [lo, hi] = std::minmax_element(g.adjacency_.begin(), g.adjacency_.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    g.min_degree_ = lo->size();
    g.max_degree_ = hi->size();
  }
  return g;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= order() || v >= order()) return false;
  return (bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
}

std::span<const std::uint64_t> Graph::neighbor_bits(std::size_t v) const {
  return {bits_.data() + v * words_per_row_, words_per_row_};
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < order(); ++u) {
    for (std::uint32_t v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> seq;
  seq.reserve(order());
  for (const auto& row : adjacency_) seq.push_back(row.size());
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

Graph complete(std::size_t n) {
  if (n == 0) throw InvalidArgument("complete(n) requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle(n) requires n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  if (n == 0) throw InvalidArgument("path(n) requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) {
    throw InvalidArgument("cartesian_product requires nonempty factors");
  }
  const std::size_t hn = h.order();
  std::vector<Edge> edges;
  edges.reserve(g.order() * h.size() + hn * g.size());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (const auto& [a, b] : h.edges()) {
      edges.emplace_back(ProductVertex{u, a}.flatten(hn), ProductVertex{u, b}.flatten(hn));
    }
  }
  for (const auto& [a, b] : g.edges()) {
    for (std::size_t v = 0; v < hn; ++v) {
      edges.emplace_back(ProductVertex{a, v}.flatten(hn), ProductVertex{b, v}.flatten(hn));
    }
  }
  return Graph::from_edges(g.order() * hn, edges);
}

Graph star_subdivide(const Graph& g, std::size_t pendants_per_vertex) {
  if (pendants_per_vertex == 0) {
    throw InvalidArgument("star_subdivide requires at least one pendant per vertex");
  }
  const std::size_t n = g.order();
  const std::size_t p = pendants_per_vertex;
  const auto original_edges = g.edges();
  const std::size_t first_interior = n + n * p;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t t = 0; t < p; ++t) edges.emplace_back(v, n + v * p + t);
  }
  for (std::size_t e = 0; e < original_edges.size(); ++e) {
    const auto [u, v] = original_edges[e];
    const std::size_t a = first_interior + 2 * e;
    const std::size_t b = a + 1;
    edges.emplace_back(u, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, v);
  }
  return Graph::from_edges(first_interior + 2 * original_edges.size(), edges);
}

bool is_spanning_subgraph(const Graph& g, const Graph& g_super) {
  if (g.order() != g_super.order()) {
    throw InvalidArgument("is_spanning_subgraph: vertex counts differ (" + std::to_string(g.order()) +
                          " vs " + std::to_string(g_super.order()) + ")");
  }
  for (const auto& [u, v] : g.edges()) {
    if (!g_super.has_edge(u, v)) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> component_labels(const Graph& g, std::size_t& count) {
  std::vector<std::size_t> label(g.order(), g.order());
  std::vector<std::size_t> stack;
  count = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (label[s] != g.order()) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::uint32_t u : g.neighbors(v)) {
        if (label[u] == g.order()) {
          label[u] = count;
          stack.push_back(u);
        }
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  component_labels(g, count);
  return count <= 1;
}

bool is_disjoint_union_of_k2(const Graph& g) {
  if (g.order() == 0) return false;
  // Every component has exactly 2 vertices and 1 edge iff every vertex has degree exactly 1.
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) return false;
  }
  return true;
}

}  // namespace ktds
