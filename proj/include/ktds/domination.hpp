#pragma once

#include <cstddef>

#include "ktds/cover_search.hpp"
#include "ktds/graph.hpp"
#include "ktds/vertex_set.hpp"

namespace ktds {

/// total: count chosen vertices in N(v); closed: count them in N[v].
enum class DominationKind { total, closed };

const char* kind_name(DominationKind kind) noexcept;

struct DominationResult {
  int value = 0;
  VertexSet certificate;
  DominationKind kind = DominationKind::total;
  int k = 1;
  SearchStats stats;
};

struct SolverOptions {
  /// Return the lexicographically least optimum (same certificate as brute force).
  bool canonical = false;
  unsigned threads = 1;
};

inline constexpr std::size_t kBruteForceCap = 20;
inline constexpr std::size_t kBranchAndBoundCap = 64;

/// Every vertex has at least k neighbors in s.
bool is_ktds(const Graph& g, const VertexSet& s, int k);
/// Every closed neighborhood holds at least k members of s.
bool is_kds(const Graph& g, const VertexSet& s, int k);
bool dominates(const Graph& g, const VertexSet& s, int k, DominationKind kind);

/// A kTDS exists iff min degree >= k; a kDS exists iff min degree >= k-1.
bool feasible(const Graph& g, int k, DominationKind kind);

/// Exhaustive search in order of size, then lexicographically; the certificate is the
/// lexicographically least optimum. Throws Infeasible or SizeCapExceeded (order > cap).
DominationResult gamma_bruteforce(const Graph& g, int k, DominationKind kind,
                                  std::size_t cap = kBruteForceCap);

/// Branch and bound over the multicover formulation. Throws Infeasible, or
/// SizeCapExceeded above 64 vertices.
DominationResult gamma_bnb(const Graph& g, int k, DominationKind kind, const SolverOptions& options = {});

}  // namespace ktds
