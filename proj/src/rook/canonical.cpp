#include <algorithm>

#include "ktds/error.hpp"
#include "ktds/rook.hpp"

namespace ktds {

namespace {

// Search over row orders. After fixing a prefix of rows, columns that agree on every chosen
// row form ordered classes (earlier classes hold columns with a one where the others have a
// zero). The next row's best image puts its ones first within each class, so each row order
// determines its best column order, and only rows giving the greatest next line need to be
// expanded.
class RowOrderSearch {
 public:
  explicit RowOrderSearch(const ZeroOneMatrix& m) : m_(m), used_(m.rows(), false) {}

  std::vector<std::uint8_t> run() {
    std::vector<std::vector<std::size_t>> classes(1);
    for (std::size_t j = 0; j < m_.cols(); ++j) classes[0].push_back(j);
    std::vector<std::uint8_t> prefix;
    visit(classes, prefix);
    return best_;
  }

 private:
  static std::vector<std::uint8_t> image(const ZeroOneMatrix& m, std::size_t row,
                                         const std::vector<std::vector<std::size_t>>& classes) {
    std::vector<std::uint8_t> line;
    line.reserve(m.cols());
    for (const auto& cls : classes) {
      std::size_t ones = 0;
      for (std::size_t j : cls) ones += m.at(row, j) ? 1 : 0;
      line.insert(line.end(), ones, 1);
      line.insert(line.end(), cls.size() - ones, 0);
    }
    return line;
  }

  void visit(const std::vector<std::vector<std::size_t>>& classes, std::vector<std::uint8_t>& prefix) {
    const std::size_t depth = prefix.size() / m_.cols();
    if (depth == m_.rows()) {
      if (best_.empty() || prefix > best_) best_ = prefix;
      return;
    }
    std::vector<std::uint8_t> top;
    std::vector<std::size_t> candidates;
    for (std::size_t r = 0; r < m_.rows(); ++r) {
      if (used_[r]) continue;
      auto line = image(m_, r, classes);
      if (candidates.empty() || line > top) {
        top = std::move(line);
        candidates.assign(1, r);
      } else if (line == top) {
        candidates.push_back(r);
      }
    }
    // Compare the extended prefix with the incumbent's prefix of the same length.
    if (!best_.empty()) {
      const auto begin = best_.begin() + static_cast<std::ptrdiff_t>(prefix.size());
      const auto end = begin + static_cast<std::ptrdiff_t>(m_.cols());
      const bool prefix_ties = std::equal(prefix.begin(), prefix.end(), best_.begin());
      if (prefix_ties && std::lexicographical_compare(top.begin(), top.end(), begin, end)) return;
    }
    for (std::size_t r : candidates) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& cls : classes) {
        std::vector<std::size_t> ones;
        std::vector<std::size_t> zeros;
        for (std::size_t j : cls) (m_.at(r, j) ? ones : zeros).push_back(j);
        if (!ones.empty()) next.push_back(std::move(ones));
        if (!zeros.empty()) next.push_back(std::move(zeros));
      }
      used_[r] = true;
      const std::size_t size = prefix.size();
      prefix.insert(prefix.end(), top.begin(), top.end());
      visit(next, prefix);
      prefix.resize(size);
      used_[r] = false;
    }
  }

  const ZeroOneMatrix& m_;
  std::vector<bool> used_;
  std::vector<std::uint8_t> best_;
};

ZeroOneMatrix from_cells(std::size_t rows, std::size_t cols, const std::vector<std::uint8_t>& cells) {
  ZeroOneMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, cells[i * cols + j] != 0);
  }
  return out;
}

}  // namespace

ZeroOneMatrix canonicalize(const ZeroOneMatrix& m) {
  const std::size_t small = std::min(m.rows(), m.cols());
  if (small > kCanonicalCap) throw SizeCapExceeded("canonicalize", small, kCanonicalCap);
  if (m.rows() < m.cols()) return from_cells(m.rows(), m.cols(), RowOrderSearch(m).run());
  const ZeroOneMatrix t = m.transpose();
  auto best = RowOrderSearch(t).run();
  if (m.rows() == m.cols()) best = std::max(best, RowOrderSearch(m).run());
  return from_cells(t.rows(), t.cols(), best);
}

}  // namespace ktds
