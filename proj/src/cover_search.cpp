#include "ktds/cover_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <deque>
#include <mutex>
#include <span>
#include <thread>

#include "ktds/error.hpp"
#include "ktds/kernels.hpp"

namespace ktds {

namespace {

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

/// Constraints with positive demand, plus the item -> constraint incidence in both directions.
struct Model {
  std::size_t items = 0;
  Mask all_items = 0;
  std::vector<Mask> sets;
  std::vector<int> demand;
  std::vector<Mask> item_rows;  // item_rows[u]: constraints containing u
  std::vector<int> static_degree;
};

Model build_model(const CoverProblem& problem) {
  if (problem.items > kCoverSearchCap) {
    throw SizeCapExceeded("cover search (items)", problem.items, kCoverSearchCap);
  }
  if (problem.sets.size() != problem.demand.size()) {
    throw InvalidArgument("cover problem: sets and demand sizes differ");
  }
  Model m;
  m.items = problem.items;
  m.all_items = low_bits(problem.items);
  for (std::size_t c = 0; c < problem.sets.size(); ++c) {
    if (problem.demand[c] <= 0) continue;
    if ((problem.sets[c] & ~m.all_items) != 0) throw InvalidArgument("cover problem: set has out-of-range item");
    m.sets.push_back(problem.sets[c]);
    m.demand.push_back(problem.demand[c]);
  }
  if (m.sets.size() > kCoverSearchCap) {
    throw SizeCapExceeded("cover search (constraints)", m.sets.size(), kCoverSearchCap);
  }
  m.item_rows.assign(m.items, 0);
  m.static_degree.assign(m.items, 0);
  for (std::size_t c = 0; c < m.sets.size(); ++c) {
    for (Mask s = m.sets[c]; s != 0; s &= s - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(s));
      m.item_rows[u] |= bit(c);
      ++m.static_degree[u];
    }
  }
  return m;
}

struct Node {
  Mask in = 0;
  Mask out = 0;
};

/// Per-node quantities derived from (in, out).
struct NodeState {
  std::array<std::int32_t, 64> have{};
  std::array<std::int32_t, 64> avail{};
  Mask unsat = 0;
};

class Searcher {
 public:
  Searcher(const Model& model, TieBreak tie_break) : m_(model), tie_break_(tie_break) {}

  /// Unit propagation: a constraint whose remaining candidates exactly meet its demand
  /// forces them all in. Returns false when some constraint can no longer be met.
  bool propagate(Node& node, NodeState& st) const {
    const std::size_t nc = m_.sets.size();
    for (;;) {
      kernels::masked_popcounts(m_.sets, node.in, std::span(st.have.data(), nc));
      kernels::masked_popcounts(m_.sets, m_.all_items & ~node.out, std::span(st.avail.data(), nc));
      Mask forced = 0;
      st.unsat = 0;
      for (std::size_t c = 0; c < nc; ++c) {
        if (st.have[c] >= m_.demand[c]) continue;
        st.unsat |= bit(c);
        const int slack = st.avail[c] - m_.demand[c];
        if (slack < 0) return false;
        if (slack == 0) forced |= m_.sets[c] & ~node.out & ~node.in;
      }
      if (forced == 0) return true;
      node.in |= forced;
    }
  }

  /// Lower bound on how many more items the node needs.
  int lower_bound(const Node& node, const NodeState& st, std::span<std::int32_t> weights) const {
    const Mask undecided = m_.all_items & ~node.in & ~node.out;
    int total_need = 0;
    int max_need = 0;
    for (Mask s = st.unsat; s != 0; s &= s - 1) {
      const auto c = static_cast<std::size_t>(std::countr_zero(s));
      const int need = m_.demand[c] - st.have[c];
      total_need += need;
      max_need = std::max(max_need, need);
    }

    // An added item lowers the total outstanding demand by at most the number of unmet
    // constraints containing it; take the largest such reductions until the demand is met.
    kernels::masked_popcounts(m_.item_rows, st.unsat, weights);
    std::array<int, 66> histogram{};
    for (Mask s = undecided; s != 0; s &= s - 1) {
      ++histogram[static_cast<std::size_t>(weights[static_cast<std::size_t>(std::countr_zero(s))])];
    }
    int by_weight = 0;
    int covered = 0;
    for (int w = 64; w >= 1 && covered < total_need; --w) {
      const int take_all = histogram[static_cast<std::size_t>(w)];
      if (take_all == 0) continue;
      const int needed = (total_need - covered + w - 1) / w;
      const int take = std::min(take_all, needed);
      by_weight += take;
      covered += take * w;
    }
    if (covered < total_need) return std::numeric_limits<int>::max() / 2;

    // Unmet constraints with pairwise disjoint candidate sets need separate items.
    int disjoint = 0;
    Mask used = 0;
    for (Mask s = st.unsat; s != 0; s &= s - 1) {
      const auto c = static_cast<std::size_t>(std::countr_zero(s));
      const Mask cand = m_.sets[c] & undecided;
      if ((cand & used) == 0) {
        used |= cand;
        disjoint += m_.demand[c] - st.have[c];
      }
    }
    return std::max({by_weight, max_need, disjoint});
  }

  /// Item to branch on, or 64 if none (cannot happen at an unsatisfied feasible node).
  std::size_t choose_item(const Node& node, const NodeState& st, std::span<const std::int32_t> weights) const {
    const Mask undecided = m_.all_items & ~node.in & ~node.out;
    if (tie_break_ == TieBreak::lex_least || tie_break_ == TieBreak::lex_greatest) {
      return undecided == 0 ? 64 : static_cast<std::size_t>(std::countr_zero(undecided));
    }
    // Most constrained unmet constraint (least slack, then largest need), then its
    // candidate with the highest residual degree.
    std::size_t best_c = 64;
    int best_slack = 0;
    int best_need = 0;
    for (Mask s = st.unsat; s != 0; s &= s - 1) {
      const auto c = static_cast<std::size_t>(std::countr_zero(s));
      const int slack = st.avail[c] - m_.demand[c];
      const int need = m_.demand[c] - st.have[c];
      if (best_c == 64 || slack < best_slack || (slack == best_slack && need > best_need)) {
        best_c = c;
        best_slack = slack;
        best_need = need;
      }
    }
    if (best_c == 64) return 64;
    std::size_t best_u = 64;
    for (Mask s = m_.sets[best_c] & undecided; s != 0; s &= s - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(s));
      if (best_u == 64 || weights[u] > weights[best_u] ||
          (weights[u] == weights[best_u] && m_.static_degree[u] > m_.static_degree[best_u])) {
        best_u = u;
      }
    }
    return best_u;
  }

  Mask greedy(Node node) const {
    NodeState st;
    std::array<std::int32_t, 64> weights{};
    while (propagate(node, st) && st.unsat != 0) {
      kernels::masked_popcounts(m_.item_rows, st.unsat, std::span(weights.data(), m_.items));
      const Mask undecided = m_.all_items & ~node.in & ~node.out;
      std::size_t best_u = 64;
      for (Mask s = undecided; s != 0; s &= s - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(s));
        if (best_u == 64 || weights[u] > weights[best_u]) best_u = u;
      }
      if (best_u == 64) break;
      node.in |= bit(best_u);
    }
    return node.in;
  }

  const Model& model() const { return m_; }
  TieBreak tie_break() const { return tie_break_; }

 private:
  const Model& m_;
  TieBreak tie_break_;
};

/// Shared incumbent for one solve (possibly across workers).
class Incumbent {
 public:
  Incumbent(int value, Mask chosen) : value_(value), chosen_(chosen) {}

  int value() const { return value_.load(std::memory_order_relaxed); }

  void offer(int value, Mask chosen) {
    std::lock_guard lock(mutex_);
    if (value < value_.load(std::memory_order_relaxed)) {
      chosen_ = chosen;
      value_.store(value, std::memory_order_relaxed);
    }
  }

  Mask chosen() const {
    std::lock_guard lock(mutex_);
    return chosen_;
  }

 private:
  std::atomic<int> value_;
  mutable std::mutex mutex_;
  Mask chosen_;
};

/// Depth-first search. With a target (lexicographic mode) the first cover of size <= target
/// ends the search; otherwise it looks for covers strictly smaller than the incumbent.
class Dfs {
 public:
  Dfs(const Searcher& searcher, Incumbent& incumbent, std::optional<int> target)
      : s_(searcher), inc_(incumbent), target_(target) {}

  bool run(Node node) { return visit(node); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool visit(Node node) {
    ++nodes_;
    NodeState st;
    if (!s_.propagate(node, st)) return false;
    const int size = std::popcount(node.in);
    if (st.unsat == 0) {
      if (target_) {
        if (size <= *target_) {
          inc_.offer(size, node.in);
          return true;
        }
        return false;
      }
      inc_.offer(size, node.in);
      return false;
    }
    std::array<std::int32_t, 64> weights{};
    const int lb = s_.lower_bound(node, st, std::span(weights.data(), s_.model().items));
    if (target_ ? size + lb > *target_ : size + lb >= inc_.value()) return false;

    const std::size_t u = s_.choose_item(node, st, weights);
    if (u == 64) return false;
    Node include = node;
    include.in |= bit(u);
    Node exclude = node;
    exclude.out |= bit(u);
    if (s_.tie_break() == TieBreak::lex_greatest) {
      if (visit(exclude)) return true;
      return visit(include);
    }
    if (visit(include)) return true;
    return visit(exclude);
  }

  const Searcher& s_;
  Incumbent& inc_;
  std::optional<int> target_;
  std::uint64_t nodes_ = 0;
};

/// Expands the search tree breadth-first into independent subproblems for the workers.
std::vector<Node> split_frontier(const Searcher& s, Incumbent& inc, std::size_t wanted, std::uint64_t& nodes) {
  std::deque<Node> frontier{Node{}};
  std::vector<Node> done;
  while (!frontier.empty() && frontier.size() + done.size() < wanted) {
    Node node = frontier.front();
    frontier.pop_front();
    ++nodes;
    NodeState st;
    if (!s.propagate(node, st)) continue;
    if (st.unsat == 0) {
      inc.offer(std::popcount(node.in), node.in);
      continue;
    }
    std::array<std::int32_t, 64> weights{};
    const int lb = s.lower_bound(node, st, std::span(weights.data(), s.model().items));
    if (std::popcount(node.in) + lb >= inc.value()) continue;
    const std::size_t u = s.choose_item(node, st, weights);
    if (u == 64) continue;
    frontier.push_back({node.in | bit(u), node.out});
    frontier.push_back({node.in, node.out | bit(u)});
  }
  done.insert(done.end(), frontier.begin(), frontier.end());
  return done;
}

CoverSolution solve_unordered(const Searcher& s, unsigned threads) {
  const Mask seed = s.greedy(Node{});
  Incumbent inc(std::popcount(seed), seed);
  SearchStats stats;
  if (threads <= 1) {
    Dfs dfs(s, inc, std::nullopt);
    dfs.run(Node{});
    stats.nodes = dfs.nodes();
  } else {
    std::uint64_t split_nodes = 0;
    const std::vector<Node> work = split_frontier(s, inc, std::size_t{threads} * 16, split_nodes);
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total_nodes{split_nodes};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        Dfs dfs(s, inc, std::nullopt);
        for (std::size_t i = next.fetch_add(1); i < work.size(); i = next.fetch_add(1)) dfs.run(work[i]);
        total_nodes.fetch_add(dfs.nodes());
      });
    }
    for (auto& th : pool) th.join();
    stats.nodes = total_nodes.load();
  }
  return {inc.value(), inc.chosen(), stats};
}

}  // namespace

bool cover_feasible(const CoverProblem& problem) {
  for (std::size_t c = 0; c < problem.sets.size(); ++c) {
    if (std::popcount(problem.sets[c] & low_bits(problem.items)) < problem.demand[c]) return false;
  }
  return true;
}

std::optional<CoverSolution> solve_min_cover(const CoverProblem& problem, const CoverOptions& options) {
  const Model model = build_model(problem);
  if (!cover_feasible(problem)) return std::nullopt;

  Searcher unordered(model, TieBreak::any);
  CoverSolution best = solve_unordered(unordered, std::max(1U, options.threads));
  if (options.tie_break == TieBreak::any) return best;

  Searcher ordered(model, options.tie_break);
  Incumbent inc(best.value + 1, 0);
  Dfs dfs(ordered, inc, best.value);
  if (!dfs.run(Node{})) {
    throw Error("cover search: lexicographic pass found no cover of the optimal size");
  }
  best.chosen = inc.chosen();
  best.stats.nodes += dfs.nodes();
  return best;
}

}  // namespace ktds
