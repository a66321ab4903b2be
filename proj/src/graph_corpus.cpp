#include "ktds/graph_corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ktds/error.hpp"

namespace ktds {

std::uint64_t brute_force_canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 8) throw SizeCapExceeded("brute_force_canonical_code", n, 8);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        code = (code << 1) | (g.has_edge(perm[i], perm[j]) ? 1U : 0U);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<NamedGraph> connected_graph_classes(std::size_t max_order) {
  if (max_order > 7) throw SizeCapExceeded("connected_graph_classes", max_order, 7);
  std::vector<NamedGraph> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::vector<Edge> pairs;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::set<std::uint64_t> seen;
    std::size_t index = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1U) edges.push_back(pairs[e]);
      }
      if (edges.size() + 1 < n) continue;
      Graph g = Graph::from_edges(n, edges);
      if (!is_connected(g)) continue;
      if (!seen.insert(brute_force_canonical_code(g)).second) continue;
      out.push_back({"conn" + std::to_string(n) + "_" + std::to_string(index++), std::move(g)});
    }
  }
  return out;
}

std::vector<NamedGraph> standard_generators() {
  std::vector<NamedGraph> out;
  for (std::size_t n = 2; n <= 5; ++n) out.push_back({"K" + std::to_string(n), complete(n)});
  for (std::size_t n = 3; n <= 6; ++n) out.push_back({"C" + std::to_string(n), cycle(n)});
  out.push_back({"P", petersen()});
  return out;
}

Graph random_connected_graph(std::size_t order, double edge_probability, std::mt19937_64& rng) {
  if (order == 0) throw InvalidArgument("random_connected_graph requires order >= 1");
  std::vector<Edge> edges;
  std::vector<std::size_t> perm(order);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 1; i < order; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.emplace_back(perm[pick(rng)], perm[i]);
  }
  std::bernoulli_distribution coin(edge_probability);
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = u + 1; v < order; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(order, edges);
}

}  // namespace ktds
