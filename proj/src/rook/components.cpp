#include <algorithm>
#include <numeric>
#include <set>

#include "ktds/error.hpp"
#include "ktds/rook.hpp"

namespace ktds {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<ComponentProfile> component_graph(const ZeroOneMatrix& m) {
  // Nodes 0..rows-1 are rows and rows..rows+cols-1 are columns; every one joins its row and
  // column. Ones in the same row or column end up in one class, which is the closure of the
  // "adjacent along a line" relation.
  UnionFind uf(m.rows() + m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j)) uf.unite(i, m.rows() + j);
    }
  }
  std::vector<ComponentProfile> out;
  std::vector<std::size_t> slot(m.rows() + m.cols(), SIZE_MAX);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j)) continue;
      const std::size_t root = uf.find(i);
      if (slot[root] == SIZE_MAX) {
        slot[root] = out.size();
        out.emplace_back();
      }
      out[slot[root]].cells.emplace_back(i, j);
    }
  }
  for (auto& c : out) {
    std::set<std::size_t> rows;
    std::set<std::size_t> cols;
    for (const auto& [i, j] : c.cells) {
      rows.insert(i);
      cols.insert(j);
    }
    c.rows.assign(rows.begin(), rows.end());
    c.cols.assign(cols.begin(), cols.end());
    c.x = c.rows.size();
    c.y = c.cols.size();
    c.ones = c.cells.size();
  }
  return out;
}

ZeroOneMatrix make_J(std::size_t x, std::size_t y) {
  if (x < 1 || y < 1) throw InvalidArgument("J(x,y) requires x, y >= 1");
  ZeroOneMatrix m(x, y);
  for (std::size_t i = 0; i < x; ++i) {
    for (std::size_t j = 0; j < y; ++j) m.set(i, j, true);
  }
  return m;
}

ZeroOneMatrix make_A(std::size_t y) {
  if (y < 6) throw InvalidArgument("A(y) requires y >= 6");
  ZeroOneMatrix m(2, y);
  for (std::size_t j = 0; j < y; ++j) m.set(j < 3 ? 0 : 1, j, true);
  return m;
}

ZeroOneMatrix make_B(std::size_t x, std::size_t y) {
  if (x < 3 || y < 3) throw InvalidArgument("B(x,y) requires x, y >= 3");
  ZeroOneMatrix m(x, y);
  for (std::size_t j = 0; j < y; ++j) m.set(0, j, true);
  for (std::size_t i = 0; i < x; ++i) m.set(i, 0, true);
  return m;
}

ZeroOneMatrix make_C(std::size_t x, std::size_t y) {
  if (x < 4 || y < 4) throw InvalidArgument("C(x,y) requires x, y >= 4");
  ZeroOneMatrix m(x, y);
  for (std::size_t j = 1; j < y; ++j) m.set(0, j, true);
  for (std::size_t i = 1; i < x; ++i) m.set(i, 0, true);
  return m;
}

ZeroOneMatrix switch_components(const ZeroOneMatrix& m, const std::vector<ComponentProfile>& selected,
                                const ZeroOneMatrix& h) {
  if (!is_ktds_matrix(m, 2)) throw PreconditionViolated("switch: M is not a 2TDS matrix");
  if (m.has_zero_line()) throw PreconditionViolated("switch: M has an all-zero row or column");
  if (selected.empty()) throw PreconditionViolated("switch: no components selected");

  const auto components = component_graph(m);
  std::set<std::size_t> rows;
  std::set<std::size_t> cols;
  std::set<std::size_t> used;
  for (const auto& sel : selected) {
    const auto it = std::find_if(components.begin(), components.end(),
                                 [&](const ComponentProfile& c) { return c.cells == sel.cells; });
    if (it == components.end()) throw PreconditionViolated("switch: selection is not a whole component of M");
    if (!used.insert(static_cast<std::size_t>(it - components.begin())).second) {
      throw PreconditionViolated("switch: a component is selected twice");
    }
    rows.insert(it->rows.begin(), it->rows.end());
    cols.insert(it->cols.begin(), it->cols.end());
  }
  if (h.rows() != rows.size() || h.cols() != cols.size()) {
    throw PreconditionViolated("switch: H is " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()) +
                               " but the selection occupies " + std::to_string(rows.size()) + "x" +
                               std::to_string(cols.size()));
  }
  if (!is_ktds_matrix(h, 2)) throw PreconditionViolated("switch: H is not a 2TDS matrix");
  if (h.has_zero_line()) throw PreconditionViolated("switch: H has an all-zero row or column");

  ZeroOneMatrix out = m;
  for (std::size_t idx : used) {
    for (const auto& [i, j] : components[idx].cells) out.set(i, j, false);
  }
  const std::vector<std::size_t> row_list(rows.begin(), rows.end());
  const std::vector<std::size_t> col_list(cols.begin(), cols.end());
  for (std::size_t a = 0; a < row_list.size(); ++a) {
    for (std::size_t b = 0; b < col_list.size(); ++b) {
      if (h.at(a, b)) out.set(row_list[a], col_list[b], true);
    }
  }
  return out;
}

}  // namespace ktds
