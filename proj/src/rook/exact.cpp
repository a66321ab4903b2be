#include <algorithm>
#include <deque>
#include <functional>

#include "ktds/error.hpp"
#include "ktds/rook.hpp"

namespace ktds {

namespace {

// A kTDS matrix with row sums r and column sums c has kappa = r_i + c_j at a zero cell and
// r_i + c_j - 2 at a one. So sums (r, c) admit a kTDS matrix iff min r + min c >= k and some
// 0/1 matrix with exactly those sums puts its ones only where r_i + c_j >= k + 2. Rows and
// columns may be permuted freely, so both sum vectors are taken nonincreasing, and the
// existence question is a bipartite flow problem.

/// Edmonds-Karp on the row/column transportation network. Returns the matrix when the
/// sums are realizable.
std::optional<ZeroOneMatrix> realize(const std::vector<int>& r, const std::vector<int>& c, int k) {
  const std::size_t n = r.size();
  const std::size_t m = c.size();
  const std::size_t source = n + m;
  const std::size_t sink = n + m + 1;
  const std::size_t nodes = n + m + 2;
  std::vector<int> cap(nodes * nodes, 0);
  auto at = [&](std::size_t a, std::size_t b) -> int& { return cap[a * nodes + b]; };
  for (std::size_t i = 0; i < n; ++i) {
    at(source, i) = r[i];
    for (std::size_t j = 0; j < m; ++j) {
      if (r[i] + c[j] >= k + 2) at(i, n + j) = 1;
    }
  }
  for (std::size_t j = 0; j < m; ++j) at(n + j, sink) = c[j];

  int total = 0;
  int flow = 0;
  for (int v : r) total += v;
  std::vector<std::size_t> parent(nodes);
  while (flow < total) {
    std::fill(parent.begin(), parent.end(), SIZE_MAX);
    parent[source] = source;
    std::deque<std::size_t> queue{source};
    while (!queue.empty() && parent[sink] == SIZE_MAX) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < nodes; ++v) {
        if (parent[v] == SIZE_MAX && at(u, v) > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[sink] == SIZE_MAX) return std::nullopt;
    for (std::size_t v = sink; v != source; v = parent[v]) {
      --at(parent[v], v);
      ++at(v, parent[v]);
    }
    ++flow;
  }
  ZeroOneMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (r[i] + c[j] >= k + 2 && at(i, n + j) == 0) out.set(i, j, true);
    }
  }
  return out;
}

/// Calls visit for every nonincreasing vector of `parts` entries in [lo, hi] summing to
/// `total`; stops early when visit returns true.
bool for_each_partition(int total, std::size_t parts, int lo, int hi, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> v(parts);
  std::function<bool(std::size_t, int, int)> rec = [&](std::size_t pos, int remaining, int cap) -> bool {
    const auto left = static_cast<int>(parts - pos);
    if (left == 0) return remaining == 0 && visit(v);
    for (int x = std::min(cap, remaining - lo * (left - 1)); x >= lo; --x) {
      if (x * left < remaining) break;
      v[pos] = x;
      if (rec(pos + 1, remaining - x, x)) return true;
    }
    return false;
  };
  return rec(0, total, hi);
}

}  // namespace

ZeroOneMatrix min_ktds_matrix_by_sums(std::size_t n, std::size_t m, int k) {
  if (n < 1 || m < 1) throw InvalidArgument("rook graph dimensions must be >= 1");
  if (n > kRookSumsCap || m > kRookSumsCap) throw SizeCapExceeded("rook exact (sums)", std::max(n, m), kRookSumsCap);
  if (k < 1) throw InvalidArgument("multiplicity k must be >= 1");
  const auto ni = static_cast<int>(n);
  const auto mi = static_cast<int>(m);
  if (ni + mi - 2 < k) throw Infeasible(k, ni + mi - 2, true);

  // Summing kappa over all cells gives T(n + m - 2) >= knm.
  const int start = (k * ni * mi + ni + mi - 3) / (ni + mi - 2);
  for (int total = start; total <= ni * mi; ++total) {
    std::optional<ZeroOneMatrix> found;
    for_each_partition(total, n, 0, mi, [&](const std::vector<int>& r) {
      const int r_min = r.back();
      return for_each_partition(total, m, std::max(0, k - r_min), ni, [&](const std::vector<int>& c) {
        found = realize(r, c, k);
        return found.has_value();
      });
    });
    if (found) return *found;
  }
  throw Error("rook exact: the all-ones matrix should always qualify");
}

DominationResult gamma_rook_exact(std::size_t n, std::size_t m, int k, const RookOptions& options) {
  if (n < 1 || m < 1) throw InvalidArgument("rook graph dimensions must be >= 1");
  if (options.method == RookMethod::branch_and_bound) {
    if (n * m > kBranchAndBoundCap) throw SizeCapExceeded("rook exact", n * m, kBranchAndBoundCap);
    return gamma_bnb(rook_graph(n, m), k, DominationKind::total, options.search);
  }
  ZeroOneMatrix best = min_ktds_matrix_by_sums(n, m, k);
  if (options.search.canonical) {
    best = canonicalize(best);
    if (best.rows() != n) best = best.transpose();
  }
  DominationResult result;
  result.value = best.ones();
  result.certificate = matrix_to_set(best);
  result.kind = DominationKind::total;
  result.k = k;
  return result;
}

}  // namespace ktds
