#include "ktds/domination.hpp"

#include <bit>
#include <numeric>
#include <vector>

#include "ktds/error.hpp"
#include "ktds/kernels.hpp"

namespace ktds {

namespace {

void check_k(int k) {
  if (k < 1) throw InvalidArgument("multiplicity k must be >= 1, got " + std::to_string(k));
}

std::size_t count_in(std::span<const std::uint64_t> row, const VertexSet& s) {
  std::size_t count = 0;
  const auto words = s.words();
  for (std::size_t w = 0; w < row.size() && w < words.size(); ++w) count += std::popcount(row[w] & words[w]);
  return count;
}

/// Neighborhood masks for graphs of at most 64 vertices.
std::vector<std::uint64_t> neighborhood_masks(const Graph& g, DominationKind kind) {
  std::vector<std::uint64_t> rows(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    rows[v] = g.neighbor_bits(v)[0];
    if (kind == DominationKind::closed) rows[v] |= std::uint64_t{1} << v;
  }
  return rows;
}

void require_feasible(const Graph& g, int k, DominationKind kind) {
  check_k(k);
  if (!feasible(g, k, kind)) {
    throw Infeasible(k, static_cast<int>(g.min_degree()), kind == DominationKind::total);
  }
}

}  // namespace

const char* kind_name(DominationKind kind) noexcept { return kind == DominationKind::total ? "total" : "closed"; }

bool dominates(const Graph& g, const VertexSet& s, int k, DominationKind kind) {
  check_k(k);
  if (s.universe() != g.order()) throw InvalidArgument("vertex set universe does not match graph order");
  const auto need = static_cast<std::size_t>(k);
  if (g.order() <= 64 && g.order() > 0) {
    const auto rows = neighborhood_masks(g, kind);
    return static_cast<std::size_t>(kernels::min_masked_popcount(rows, s.low_word())) >= need;
  }
  for (std::size_t v = 0; v < g.order(); ++v) {
    std::size_t have = count_in(g.neighbor_bits(v), s);
    if (kind == DominationKind::closed && s.contains(v)) ++have;
    if (have < need) return false;
  }
  return true;
}

bool is_ktds(const Graph& g, const VertexSet& s, int k) { return dominates(g, s, k, DominationKind::total); }
bool is_kds(const Graph& g, const VertexSet& s, int k) { return dominates(g, s, k, DominationKind::closed); }

bool feasible(const Graph& g, int k, DominationKind kind) {
  if (k < 1) return false;
  const auto need = static_cast<std::size_t>(kind == DominationKind::total ? k : k - 1);
  return g.min_degree() >= need;
}

DominationResult gamma_bruteforce(const Graph& g, int k, DominationKind kind, std::size_t cap) {
  require_feasible(g, k, kind);
  const std::size_t n = g.order();
  if (n > cap || n > 64) throw SizeCapExceeded("brute force", n, std::min<std::size_t>(cap, 64));
  const auto rows = neighborhood_masks(g, kind);

  DominationResult result;
  result.kind = kind;
  result.k = k;
  std::vector<std::size_t> combo;
  for (std::size_t size = 0; size <= n; ++size) {
    combo.resize(size);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    for (;;) {
      ++result.stats.nodes;
      std::uint64_t mask = 0;
      for (std::size_t v : combo) mask |= std::uint64_t{1} << v;
      if (n == 0 || kernels::min_masked_popcount(rows, mask) >= k) {
        result.value = static_cast<int>(size);
        result.certificate = VertexSet::from_word(n, mask);
        return result;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  throw Error("brute force: feasible instance without a dominating set");
}

DominationResult gamma_bnb(const Graph& g, int k, DominationKind kind, const SolverOptions& options) {
  require_feasible(g, k, kind);
  const std::size_t n = g.order();
  if (n > kBranchAndBoundCap) throw SizeCapExceeded("branch and bound", n, kBranchAndBoundCap);

  CoverProblem problem;
  problem.items = n;
  problem.sets = neighborhood_masks(g, kind);
  problem.demand.assign(n, k);
  CoverOptions cover_options;
  cover_options.tie_break = options.canonical ? TieBreak::lex_least : TieBreak::any;
  cover_options.threads = options.threads;
  const auto solution = solve_min_cover(problem, cover_options);
  if (!solution) throw Infeasible(k, static_cast<int>(g.min_degree()), kind == DominationKind::total);

  DominationResult result;
  result.value = solution->value;
  result.certificate = VertexSet::from_word(n, solution->chosen);
  result.kind = kind;
  result.k = k;
  result.stats = solution->stats;
  return result;
}

}  // namespace ktds
