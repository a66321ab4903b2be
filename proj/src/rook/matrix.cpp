#include <cctype>
#include <sstream>

#include "ktds/error.hpp"
#include "ktds/kernels.hpp"
#include "ktds/rook.hpp"

namespace ktds {

ZeroOneMatrix::ZeroOneMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, 0), row_sums_(rows, 0), col_sums_(cols, 0) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be >= 1");
}

std::size_t ZeroOneMatrix::index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw InvalidArgument("matrix cell (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
  }
  return i * cols_ + j;
}

void ZeroOneMatrix::set(std::size_t i, std::size_t j, bool one) {
  auto& cell = cells_[index(i, j)];
  const int delta = static_cast<int>(one) - static_cast<int>(cell);
  cell = one ? 1 : 0;
  row_sums_[i] += delta;
  col_sums_[j] += delta;
  ones_ += delta;
}

ZeroOneMatrix ZeroOneMatrix::transpose() const {
  ZeroOneMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j)) t.set(j, i, true);
    }
  }
  return t;
}

bool ZeroOneMatrix::has_zero_line() const {
  for (int s : row_sums_) {
    if (s == 0) return true;
  }
  for (int s : col_sums_) {
    if (s == 0) return true;
  }
  return false;
}

std::string ZeroOneMatrix::to_text() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out += '\n';
    for (std::size_t j = 0; j < cols_; ++j) out += at(i, j) ? '#' : '.';
  }
  return out;
}

std::string ZeroOneMatrix::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + ":";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += ' ';
    for (std::size_t j0 = 0; j0 < cols_; j0 += 4) {
      unsigned digit = 0;
      for (std::size_t b = 0; b < 4; ++b) {
        digit <<= 1;
        if (j0 + b < cols_ && at(i, j0 + b)) digit |= 1;
      }
      out += kDigits[digit];
    }
  }
  return out;
}

ZeroOneMatrix ZeroOneMatrix::from_text(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t offset = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line); offset += line.size() + 1) {
    std::string row;
    for (std::size_t p = 0; p < line.size(); ++p) {
      const char c = line[p];
      if (c == '#' || c == '.') {
        row += c;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("unexpected character '") + c + "' in matrix", offset + p);
      }
    }
    if (row.empty()) continue;
    if (!lines.empty() && row.size() != lines.front().size()) {
      throw ParseError("matrix rows have different lengths", offset);
    }
    lines.push_back(std::move(row));
  }
  if (lines.empty()) throw ParseError("empty matrix", 0);
  ZeroOneMatrix m(lines.size(), lines.front().size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = 0; j < lines[i].size(); ++j) m.set(i, j, lines[i][j] == '#');
  }
  return m;
}

ZeroOneMatrix ZeroOneMatrix::from_hex(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("compact matrix: missing ':'", 0);
  std::istringstream head{std::string(text.substr(0, colon))};
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!(head >> rows >> cols) || rows == 0 || cols == 0) {
    throw ParseError("compact matrix: expected positive 'rows cols' before ':'", 0);
  }
  std::string extra;
  if (head >> extra) throw ParseError("compact matrix: unexpected text before ':'", 0);
  std::istringstream body{std::string(text.substr(colon + 1))};
  const std::size_t digits = (cols + 3) / 4;
  ZeroOneMatrix m(rows, cols);
  std::string word;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!(body >> word)) throw ParseError("compact matrix: too few rows", text.size());
    if (word.size() != digits) throw ParseError("compact matrix: row " + std::to_string(i) + " has wrong width", colon);
    for (std::size_t d = 0; d < digits; ++d) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(word[d])));
      unsigned value = 0;
      if (c >= '0' && c <= '9') {
        value = static_cast<unsigned>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        value = static_cast<unsigned>(c - 'a' + 10);
      } else {
        throw ParseError(std::string("compact matrix: bad hex digit '") + word[d] + "'", colon);
      }
      for (std::size_t b = 0; b < 4; ++b) {
        const bool one = ((value >> (3 - b)) & 1U) != 0;
        const std::size_t j = 4 * d + b;
        if (j < cols) {
          m.set(i, j, one);
        } else if (one) {
          throw ParseError("compact matrix: padding bits must be zero", colon);
        }
      }
    }
  }
  if (body >> word) throw ParseError("compact matrix: too many rows", colon);
  return m;
}

int kappa(const ZeroOneMatrix& m, std::size_t i, std::size_t j) {
  return m.row_sum(i) + m.col_sum(j) - 2 * static_cast<int>(m.at(i, j));
}

int min_kappa(const ZeroOneMatrix& m) {
  return kernels::min_kappa(m.cells(), m.rows(), m.cols(), m.row_sums(), m.col_sums());
}

bool is_ktds_matrix(const ZeroOneMatrix& m, int k) {
  if (k < 1) throw InvalidArgument("multiplicity k must be >= 1");
  return min_kappa(m) >= k;
}

Graph rook_graph(std::size_t n, std::size_t m) { return cartesian_product(complete(n), complete(m)); }

VertexSet matrix_to_set(const ZeroOneMatrix& m) {
  VertexSet s(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j)) s.insert(i * m.cols() + j);
    }
  }
  return s;
}

ZeroOneMatrix set_to_matrix(const VertexSet& s, std::size_t n, std::size_t m) {
  if (s.universe() != n * m) throw InvalidArgument("vertex set universe is not n*m");
  ZeroOneMatrix out(n, m);
  for (std::size_t v : s.indices()) out.set(v / m, v % m, true);
  return out;
}

}  // namespace ktds
