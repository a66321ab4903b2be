#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ktds/graph.hpp"

namespace ktds {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// One representative per isomorphism class of connected graphs on 1..max_order vertices
/// (1, 1, 2, 6, 21 classes for orders 1..5). Brute-force canonical labelling, so keep
/// max_order <= 7.
std::vector<NamedGraph> connected_graph_classes(std::size_t max_order);

/// Named generators used for sweeps: K2..K5, C3..C6, P.
std::vector<NamedGraph> standard_generators();

/// Connected graph on `order` vertices: a random spanning tree plus each remaining pair
/// independently with probability `edge_probability`.
Graph random_connected_graph(std::size_t order, double edge_probability, std::mt19937_64& rng);

/// Minimum over vertex permutations of the upper-triangle adjacency bit string. Equal for
/// two graphs iff they are isomorphic. Exponential; order <= 8.
std::uint64_t brute_force_canonical_code(const Graph& g);

}  // namespace ktds
