#include "ktds/bounds.hpp"

#include <algorithm>
#include <functional>

#include "ktds/error.hpp"
#include "ktds/rook.hpp"

namespace ktds {

namespace {

constexpr int kGammaQuantity = 0;     // + kind offset
constexpr int kRhoQuantity = 2;
constexpr int kRhoOpenQuantity = 3;

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

/// Reads witnesses; a missing name means the solver was not run (the part is inapplicable).
class Reader {
 public:
  explicit Reader(const Witnesses& w) : w_(w) {}
  std::int64_t operator[](const char* name) const {
    const auto it = w_.find(name);
    if (it == w_.end()) throw InvalidArgument(std::string("bound report is missing witness '") + name + "'");
    return it->second;
  }
  bool has(const char* name) const { return w_.count(name) != 0; }

 private:
  const Witnesses& w_;
};

BoundPart part(std::string label, std::string statement, bool applicable, const Reader& w,
               const std::function<std::int64_t(const Reader&)>& lhs,
               const std::function<std::int64_t(const Reader&)>& rhs) {
  BoundPart p;
  p.label = std::move(label);
  p.statement = std::move(statement);
  p.applicable = applicable;
  if (applicable) {
    p.lhs = lhs(w);
    p.rhs = rhs(w);
    p.holds = p.lhs <= p.rhs;
  }
  return p;
}

struct Solver {
  SolverCache* cache;
  SolverCache local;

  explicit Solver(SolverCache* c) : cache(c != nullptr ? c : &local) {}
  SolverCache& operator*() { return *cache; }
  SolverCache* operator->() { return cache; }
};

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

const char* bound_name(BoundId id) noexcept {
  switch (id) {
    case BoundId::degree_lb:
      return "degree-lb";
    case BoundId::packing_lb:
      return "packing-lb";
    case BoundId::vizing_like:
      return "vizing-like";
    case BoundId::packing_product:
      return "packing-product";
    case BoundId::open_packing_sum:
      return "open-packing-sum";
    case BoundId::product_upper:
      return "product-upper";
    case BoundId::rook_extremal:
      return "rook-extremal";
    case BoundId::vizing:
      return "vizing";
  }
  return "unknown";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (BoundId id : kAllBounds) {
    if (name == bound_name(id)) return id;
  }
  return std::nullopt;
}

bool is_single_graph_bound(BoundId id) noexcept { return id == BoundId::degree_lb || id == BoundId::packing_lb; }

bool BoundReport::applicable() const {
  return std::any_of(parts.begin(), parts.end(), [](const BoundPart& p) { return p.applicable; });
}

bool BoundReport::holds() const {
  return std::all_of(parts.begin(), parts.end(), [](const BoundPart& p) { return !p.applicable || p.holds; });
}

const BoundPart& BoundReport::headline() const {
  if (parts.empty()) throw Error("bound report without parts");
  for (const auto& p : parts) {
    if (p.applicable) return p;
  }
  return parts.front();
}

std::vector<BoundPart> evaluate_parts(BoundId id, const Witnesses& witnesses) {
  const Reader w(witnesses);
  const std::int64_t k = w["k"];
  switch (id) {
    case BoundId::degree_lb:
      return {part("degree", "ceil(k*|V| / max_degree) <= gamma_k,t(G)",
                   w["min_degree"] >= k && w["max_degree"] > 0, w,
                   [&](const Reader& r) { return ceil_div(k * r["order"], r["max_degree"]); },
                   [](const Reader& r) { return r["gamma"]; })};
    case BoundId::packing_lb: {
      const bool ok = w["min_degree"] >= k;
      return {part("open-packing", "k*rho_open(G) <= gamma_k,t(G)", ok, w,
                   [&](const Reader& r) { return k * r["rho_open"]; }, [](const Reader& r) { return r["gamma"]; }),
              part("packing", "k*rho(G) <= k*rho_open(G)", ok, w, [&](const Reader& r) { return k * r["rho"]; },
                   [&](const Reader& r) { return k * r["rho_open"]; })};
    }
    case BoundId::vizing_like: {
      const bool h_ok = w["min_degree_h"] >= k;
      const bool g_ok = h_ok && w["min_degree_g"] >= k && w["gamma_g"] <= 2 * k * w["rho_g"];
      return {part("packing-scaled", "rho(G)*gamma_k,t(H) <= gamma_k,t(GxH)", h_ok, w,
                   [](const Reader& r) { return r["rho_g"] * r["gamma_h"]; },
                   [](const Reader& r) { return r["gamma_gh"]; }),
              part("product", "gamma_k,t(G)*gamma_k,t(H) <= 2k*gamma_k,t(GxH)", g_ok, w,
                   [](const Reader& r) { return r["gamma_g"] * r["gamma_h"]; },
                   [&](const Reader& r) { return 2 * k * r["gamma_gh"]; })};
    }
    case BoundId::packing_product: {
      const bool dom_ok = w["min_degree_g"] + w["min_degree_h"] >= k;
      return {part("packing", "rho(G)*rho(H) <= rho(GxH)", true, w,
                   [](const Reader& r) { return r["rho_g"] * r["rho_h"]; }, [](const Reader& r) { return r["rho_gh"]; }),
              part("domination", "k*rho(G)*rho(H) <= gamma_k,t(GxH)", dom_ok, w,
                   [&](const Reader& r) { return k * r["rho_g"] * r["rho_h"]; },
                   [](const Reader& r) { return r["gamma_gh"]; })};
    }
    case BoundId::open_packing_sum: {
      const bool pack_ok = w["g_is_k2_union"] == 0;
      const bool dom_ok = pack_ok && w["min_degree_g"] + w["min_degree_h"] >= k;
      auto sum = [](const Reader& r) { return r["rho_open_g"] + r["rho_open_h"] - 1; };
      return {part("open-packing", "rho_open(G)+rho_open(H)-1 <= rho_open(GxH)", pack_ok, w, sum,
                   [](const Reader& r) { return r["rho_open_gh"]; }),
              part("domination", "k*(rho_open(G)+rho_open(H)-1) <= gamma_k,t(GxH)", dom_ok, w,
                   [&](const Reader& r) { return k * sum(r); }, [](const Reader& r) { return r["gamma_gh"]; })};
    }
    case BoundId::product_upper:
      return {part("product-upper", "gamma_k,t(GxH) <= gamma_k,t(G)*|V(H)|", w["min_degree_g"] >= k, w,
                   [](const Reader& r) { return r["gamma_gh"]; },
                   [](const Reader& r) { return r["gamma_g"] * r["order_h"]; })};
    case BoundId::rook_extremal:
      return {part("extremal", "gamma_k,t(G'xH') <= gamma_k,t(GxH)", w["min_degree_g"] + w["min_degree_h"] >= k, w,
                   [](const Reader& r) { return r["gamma_extremal"]; }, [](const Reader& r) { return r["gamma_gh"]; })};
    case BoundId::vizing:
      return {part("vizing", "gamma(G)*gamma(H) <= gamma(GxH)", true, w,
                   [](const Reader& r) { return r["dom_g"] * r["dom_h"]; }, [](const Reader& r) { return r["dom_gh"]; })};
  }
  throw InvalidArgument("unknown bound id");
}

bool witnesses_consistent(const BoundReport& report) {
  try {
    return evaluate_parts(report.bound_id, report.witnesses) == report.parts;
  } catch (const InvalidArgument&) {
    return false;
  }
}

// --- SolverCache -------------------------------------------------------------------------

SolverCache::Key SolverCache::key_of(const Graph& g, int quantity, int k) { return {g.order(), g.edges(), quantity, k}; }

int SolverCache::gamma(const Graph& g, int k, DominationKind kind) {
  Key key = key_of(g, kGammaQuantity + (kind == DominationKind::closed ? 1 : 0), k);
  {
    std::lock_guard lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  SolverOptions options;
  options.threads = threads_;
  const int value = gamma_bnb(g, k, kind, options).value;
  std::lock_guard lock(mutex_);
  values_.emplace(std::move(key), value);
  return value;
}

int SolverCache::rho(const Graph& g) {
  Key key = key_of(g, kRhoQuantity, 0);
  {
    std::lock_guard lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  const int value = packing_number(g, threads_).value;
  std::lock_guard lock(mutex_);
  values_.emplace(std::move(key), value);
  return value;
}

int SolverCache::rho_open(const Graph& g) {
  Key key = key_of(g, kRhoOpenQuantity, 0);
  {
    std::lock_guard lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  const int value = open_packing_number(g, threads_).value;
  std::lock_guard lock(mutex_);
  values_.emplace(std::move(key), value);
  return value;
}

int SolverCache::gamma_rook(std::size_t n, std::size_t m, int k) {
  if (std::max(n, m) <= kRookSumsCap) return gamma_rook_exact(n, m, k).value;
  return gamma(rook_graph(n, m), k, DominationKind::total);
}

const Graph& SolverCache::product(const Graph& g, const Graph& h) {
  auto key = std::make_pair(key_of(g, 0, 0), key_of(h, 0, 0));
  std::lock_guard lock(mutex_);
  auto& slot = products_[key];
  if (!slot) slot = std::make_unique<Graph>(cartesian_product(g, h));
  return *slot;
}

std::size_t SolverCache::entries() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

// --- checks --------------------------------------------------------------------------------

namespace {

BoundReport finish(BoundId id, int k, Witnesses w) {
  BoundReport report;
  report.bound_id = id;
  report.k = k;
  report.parts = evaluate_parts(id, w);
  report.witnesses = std::move(w);
  return report;
}

void require_k(int k) {
  if (k < 1) throw InvalidArgument("multiplicity k must be >= 1");
}

}  // namespace

BoundReport check_degree_lb(const Graph& g, int k, SolverCache* cache) {
  require_k(k);
  Solver s(cache);
  Witnesses w{{"k", k},
              {"order", as_int(g.order())},
              {"min_degree", as_int(g.min_degree())},
              {"max_degree", as_int(g.max_degree())}};
  if (feasible(g, k, DominationKind::total)) w["gamma"] = s->gamma(g, k, DominationKind::total);
  return finish(BoundId::degree_lb, k, std::move(w));
}

BoundReport check_packing_lb(const Graph& g, int k, SolverCache* cache) {
  require_k(k);
  Solver s(cache);
  Witnesses w{{"k", k}, {"min_degree", as_int(g.min_degree())}, {"rho", s->rho(g)}, {"rho_open", s->rho_open(g)}};
  if (feasible(g, k, DominationKind::total)) w["gamma"] = s->gamma(g, k, DominationKind::total);
  return finish(BoundId::packing_lb, k, std::move(w));
}

BoundReport check_vizing_like(const Graph& g, const Graph& h, int k, SolverCache* cache) {
  require_k(k);
  Solver s(cache);
  Witnesses w{{"k", k},
              {"min_degree_g", as_int(g.min_degree())},
              {"min_degree_h", as_int(h.min_degree())},
              {"rho_g", s->rho(g)}};
  if (feasible(g, k, DominationKind::total)) w["gamma_g"] = s->gamma(g, k, DominationKind::total);
  if (feasible(h, k, DominationKind::total)) {
    w["gamma_h"] = s->gamma(h, k, DominationKind::total);
    w["gamma_gh"] = s->gamma(s->product(g, h), k, DominationKind::total);
  }
  return finish(BoundId::vizing_like, k, std::move(w));
}

BoundReport check_packing_product(const Graph& g, const Graph& h, int k, SolverCache* cache) {
  require_k(k);
  Solver s(cache);
  const Graph& gh = s->product(g, h);
  Witnesses w{{"k", k},
              {"min_degree_g", as_int(g.min_degree())},
              {"min_degree_h", as_int(h.min_degree())},
              {"rho_g", s->rho(g)},
              {"rho_h", s->rho(h)},
              {"rho_gh", s->rho(gh)}};
  if (feasible(gh, k, DominationKind::total)) w["gamma_gh"] = s->gamma(gh, k, DominationKind::total);
  return finish(BoundId::packing_product, k, std::move(w));
}

BoundReport check_open_packing_sum(const Graph& g, const Graph& h, int k, SolverCache* cache) {
  require_k(k);
  Solver s(cache);
  const bool k2_union = is_disjoint_union_of_k2(g);
  Witnesses w{{"k", k},
              {"g_is_k2_union", k2_union ? 1 : 0},
              {"min_degree_g", as_int(g.min_degree())},
              {"min_degree_h", as_int(h.min_degree())},
              {"rho_open_g", s->rho_open(g)},
              {"rho_open_h", s->rho_open(h)}};
  if (!k2_union) {
    const Graph& gh = s->product(g, h);
    w["rho_open_gh"] = s->rho_open(gh);
    if (feasible(gh, k, DominationKind::total)) w["gamma_gh"] = s->gamma(gh, k, DominationKind::total);
  }
  return finish(BoundId::open_packing_sum, k, std::move(w));
}

BoundReport check_product_upper(const Graph& g, const Graph& h, int k, SolverCache* cache) {
  require_k(k);
  Solver s(cache);
  Witnesses w{{"k", k}, {"min_degree_g", as_int(g.min_degree())}, {"order_h", as_int(h.order())}};
  if (feasible(g, k, DominationKind::total)) {
    w["gamma_g"] = s->gamma(g, k, DominationKind::total);
    w["gamma_gh"] = s->gamma(s->product(g, h), k, DominationKind::total);
  }
  return finish(BoundId::product_upper, k, std::move(w));
}

BoundReport check_rook_extremal(const Graph& g, const Graph& h, int k, SolverCache* cache) {
  require_k(k);
  Solver s(cache);
  Witnesses w{{"k", k},
              {"order_g", as_int(g.order())},
              {"order_h", as_int(h.order())},
              {"min_degree_g", as_int(g.min_degree())},
              {"min_degree_h", as_int(h.min_degree())}};
  if (g.min_degree() + h.min_degree() >= static_cast<std::size_t>(k)) {
    w["gamma_gh"] = s->gamma(s->product(g, h), k, DominationKind::total);
    w["gamma_extremal"] = s->gamma_rook(g.order(), h.order(), k);
  }
  return finish(BoundId::rook_extremal, k, std::move(w));
}

BoundReport check_supergraph_extremal(const Graph& g, const Graph& h, const Graph& g_super, const Graph& h_super,
                                      int k, SolverCache* cache) {
  require_k(k);
  if (g.order() != g_super.order() || !is_spanning_subgraph(g, g_super)) {
    throw PreconditionViolated("extremal bound: G is not a spanning subgraph of G'");
  }
  if (h.order() != h_super.order() || !is_spanning_subgraph(h, h_super)) {
    throw PreconditionViolated("extremal bound: H is not a spanning subgraph of H'");
  }
  Solver s(cache);
  Witnesses w{{"k", k},
              {"order_g", as_int(g.order())},
              {"order_h", as_int(h.order())},
              {"min_degree_g", as_int(g.min_degree())},
              {"min_degree_h", as_int(h.min_degree())}};
  if (g.min_degree() + h.min_degree() >= static_cast<std::size_t>(k)) {
    w["gamma_gh"] = s->gamma(s->product(g, h), k, DominationKind::total);
    w["gamma_extremal"] = s->gamma(s->product(g_super, h_super), k, DominationKind::total);
  }
  return finish(BoundId::rook_extremal, k, std::move(w));
}

BoundReport check_vizing_conjecture(const Graph& g, const Graph& h, SolverCache* cache) {
  Solver s(cache);
  Witnesses w{{"k", 1},
              {"dom_g", s->gamma(g, 1, DominationKind::closed)},
              {"dom_h", s->gamma(h, 1, DominationKind::closed)},
              {"dom_gh", s->gamma(s->product(g, h), 1, DominationKind::closed)}};
  return finish(BoundId::vizing, 1, std::move(w));
}

BoundReport check_bound(BoundId id, const Graph& g, const Graph& h, int k, SolverCache* cache) {
  switch (id) {
    case BoundId::degree_lb:
      return check_degree_lb(g, k, cache);
    case BoundId::packing_lb:
      return check_packing_lb(g, k, cache);
    case BoundId::vizing_like:
      return check_vizing_like(g, h, k, cache);
    case BoundId::packing_product:
      return check_packing_product(g, h, k, cache);
    case BoundId::open_packing_sum:
      return check_open_packing_sum(g, h, k, cache);
    case BoundId::product_upper:
      return check_product_upper(g, h, k, cache);
    case BoundId::rook_extremal:
      return check_rook_extremal(g, h, k, cache);
    case BoundId::vizing:
      return check_vizing_conjecture(g, h, cache);
  }
  throw InvalidArgument("unknown bound id");
}

}  // namespace ktds
