#pragma once

// Rook's graphs K_n□K_m viewed as n×m 0/1 matrices: vertex (i, j) is cell (i, j) and a
// vertex set is the matrix of its indicator. A cell's open neighborhood is its row and
// column minus itself, so |N(i,j) ∩ S| = rowsum(i) + colsum(j) - 2*m(i,j) ("kappa").

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ktds/domination.hpp"
#include "ktds/graph.hpp"
#include "ktds/vertex_set.hpp"

namespace ktds {

class ZeroOneMatrix {
 public:
  ZeroOneMatrix() = default;
  /// All-zero rows×cols matrix; both dimensions must be >= 1.
  ZeroOneMatrix(std::size_t rows, std::size_t cols);

  /// One line per row, '#' for one and '.' for zero. Blank lines and surrounding
  /// whitespace are ignored; all rows must have the same length.
  static ZeroOneMatrix from_text(std::string_view text);
  /// Compact form "n m: r0 r1 ...": each row is ceil(m/4) hex digits, column 0 in the
  /// most significant bit of the first digit.
  static ZeroOneMatrix from_hex(std::string_view text);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool at(std::size_t i, std::size_t j) const { return cells_[index(i, j)] != 0; }
  void set(std::size_t i, std::size_t j, bool one);

  int row_sum(std::size_t i) const { return row_sums_.at(i); }
  int col_sum(std::size_t j) const { return col_sums_.at(j); }
  const std::vector<std::int32_t>& row_sums() const noexcept { return row_sums_; }
  const std::vector<std::int32_t>& col_sums() const noexcept { return col_sums_; }
  /// Row-major cells, one byte (0 or 1) each.
  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }
  int ones() const noexcept { return ones_; }

  ZeroOneMatrix transpose() const;
  bool has_zero_line() const;

  std::string to_text() const;  // rows joined by '\n', no trailing newline
  std::string to_hex() const;

  friend bool operator==(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> cells_;
  std::vector<std::int32_t> row_sums_;
  std::vector<std::int32_t> col_sums_;
  int ones_ = 0;
};

/// rowsum(i) + colsum(j) - 2*m(i,j).
int kappa(const ZeroOneMatrix& m, std::size_t i, std::size_t j);
int min_kappa(const ZeroOneMatrix& m);
/// kappa >= k at every cell, i.e. the ones form a kTDS of K_n□K_m.
bool is_ktds_matrix(const ZeroOneMatrix& m, int k);

/// K_n□K_m with vertex (i, j) numbered i*m + j.
Graph rook_graph(std::size_t n, std::size_t m);
VertexSet matrix_to_set(const ZeroOneMatrix& m);
ZeroOneMatrix set_to_matrix(const VertexSet& s, std::size_t n, std::size_t m);

// ---------------------------------------------------------------------------------------
// Components

/// A connected component of the ones, where two ones are linked when they share a row or
/// a column. rows/cols list the distinct lines it occupies, ascending.
struct ComponentProfile {
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // row-major order
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::size_t x = 0;  // rows.size()
  std::size_t y = 0;  // cols.size()
  std::size_t ones = 0;

  friend bool operator==(const ComponentProfile&, const ComponentProfile&) = default;
};

/// Components ordered by their first cell in row-major order.
std::vector<ComponentProfile> component_graph(const ZeroOneMatrix& m);

ZeroOneMatrix make_J(std::size_t x, std::size_t y);
/// 2×y: first row 1,1,1,0,...; second row 0,0,0,1,...,1. y >= 6.
ZeroOneMatrix make_A(std::size_t y);
/// All-one first row and first column. x, y >= 3.
ZeroOneMatrix make_B(std::size_t x, std::size_t y);
/// First row (0,1,...,1), first column (0,1,...,1). x, y >= 4.
ZeroOneMatrix make_C(std::size_t x, std::size_t y);

/// Replaces the ones of `selected` (whole components of m) by h, written into the
/// selected rows and columns in ascending order. Throws PreconditionViolated naming the
/// clause that fails.
ZeroOneMatrix switch_components(const ZeroOneMatrix& m, const std::vector<ComponentProfile>& selected,
                                const ZeroOneMatrix& h);

// ---------------------------------------------------------------------------------------
// Closed forms for k = 2 and for many columns

enum class Gamma2CaseId { undefined, n1, wide_2n, mod8_plus1, ceil34 };

const char* case_name(Gamma2CaseId id) noexcept;

struct Gamma2Case {
  Gamma2CaseId case_id = Gamma2CaseId::undefined;
  std::optional<int> value;
};

/// Minimum 2-tuple total dominating set size of K_n□K_m (either orientation).
Gamma2Case gamma2_rook_formula(std::size_t n, std::size_t m);

/// Exact value when many columns force it: kn if m >= n >= 2 and m >= kn-1, k+1 if n = 1
/// and m >= k+1 (dimensions taken with n <= m). Otherwise nullopt.
std::optional<int> gamma_rook_manycols(std::size_t n, std::size_t m, int k);
/// The upper bound kn, valid when m >= n >= 2 and m >= k.
std::optional<int> gamma_rook_manycols_upper(std::size_t n, std::size_t m, int k);

/// An n×m 2TDS matrix with gamma2_rook_formula(n, m) ones. Throws InvalidArgument for
/// (1,1), (1,2), (2,1).
ZeroOneMatrix build_min_2tds(std::size_t n, std::size_t m);

// ---------------------------------------------------------------------------------------
// Exact values and canonical forms

enum class RookMethod {
  sums,              ///< enumerate row/column sum vectors, realize by max-flow
  branch_and_bound,  ///< generic solver on the n*m-vertex graph (at most 64 cells)
};

struct RookOptions {
  RookMethod method = RookMethod::sums;
  /// canonical: certificate is canonicalize()'d for the sums method, lexicographically
  /// least for branch and bound.
  SolverOptions search;
};

inline constexpr std::size_t kRookSumsCap = 16;

/// Minimum kTDS of K_n□K_m. Throws Infeasible when n + m - 2 < k, SizeCapExceeded when a
/// dimension exceeds 16 (sums) or n*m > 64 (branch and bound).
DominationResult gamma_rook_exact(std::size_t n, std::size_t m, int k, const RookOptions& options = {});

/// A minimum n×m kTDS matrix found through its row and column sums.
ZeroOneMatrix min_ktds_matrix_by_sums(std::size_t n, std::size_t m, int k);

inline constexpr std::size_t kCanonicalCap = 9;

/// Representative of the class of m under row permutations, column permutations and
/// transposition: the oriented (rows <= cols) image whose row-major cell string is
/// lexicographically greatest. Throws SizeCapExceeded when min(rows, cols) > 9.
ZeroOneMatrix canonicalize(const ZeroOneMatrix& m);

}  // namespace ktds
