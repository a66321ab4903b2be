#pragma once

// Exact minimum-cardinality multicover by depth-first branch and bound.
//
// Both domination (every vertex needs k chosen vertices in its neighborhood) and packing
// (every closed/open neighborhood may hold at most one chosen vertex, i.e. the complement
// must cover all but one of its members) reduce to this one problem:
//
//   minimize |S|, S ⊆ {0..items-1}, subject to |S ∩ sets[c]| >= demand[c] for all c.
//
// Items and constraints are limited to 64 each so every set is one machine word.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ktds {

using Mask = std::uint64_t;

struct CoverProblem {
  std::size_t items = 0;
  std::vector<Mask> sets;
  std::vector<int> demand;
};

enum class TieBreak {
  any,              ///< fastest; returns whichever optimum the search meets first
  lex_least,        ///< optimum whose sorted member list is lexicographically least
  lex_greatest,     ///< optimum whose sorted member list is lexicographically greatest
};

struct CoverOptions {
  TieBreak tie_break = TieBreak::any;
  /// Worker threads for the unordered search; ignored (single worker) for lexicographic
  /// tie-breaking, which is inherently sequential.
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

struct CoverSolution {
  int value = 0;
  Mask chosen = 0;
  SearchStats stats;
};

inline constexpr std::size_t kCoverSearchCap = 64;

/// True iff choosing every item satisfies every demand.
bool cover_feasible(const CoverProblem& problem);

/// Optimal cover. Returns std::nullopt when infeasible; throws SizeCapExceeded when there
/// are more than 64 items or more than 64 constraints with positive demand.
std::optional<CoverSolution> solve_min_cover(const CoverProblem& problem, const CoverOptions& options = {});

}  // namespace ktds
