#pragma once

#include <cstddef>

#include "ktds/cover_search.hpp"
#include "ktds/graph.hpp"
#include "ktds/vertex_set.hpp"

namespace ktds {

/// closed: pairwise disjoint N[v] (pairwise distance >= 3); open: pairwise disjoint N(v).
enum class PackingKind { closed, open };

const char* kind_name(PackingKind kind) noexcept;

struct PackingResult {
  int value = 0;
  VertexSet certificate;
  PackingKind kind = PackingKind::closed;
  SearchStats stats;
};

inline constexpr std::size_t kPackingCap = 64;

bool is_packing(const Graph& g, const VertexSet& s);
bool is_open_packing(const Graph& g, const VertexSet& s);

/// u ~ v iff the relevant neighborhoods of u and v intersect; a packing is exactly an
/// independent set of this graph.
Graph conflict_graph(const Graph& g, PackingKind kind);

/// Maximum packing. The certificate is the lexicographically least maximum packing.
/// Throws SizeCapExceeded above 64 vertices.
PackingResult packing_number(const Graph& g, unsigned threads = 1);
PackingResult open_packing_number(const Graph& g, unsigned threads = 1);
PackingResult max_packing(const Graph& g, PackingKind kind, unsigned threads = 1);

}  // namespace ktds
