#include <algorithm>
#include <bit>
#include <limits>

#include "ktds/kernels.hpp"

namespace ktds::kernels::scalar {

void masked_popcounts(std::span<const std::uint64_t> rows, std::uint64_t mask,
                      std::span<std::int32_t> counts) {
  for (std::size_t i = 0; i < rows.size(); ++i) counts[i] = std::popcount(rows[i] & mask);
}

int min_masked_popcount(std::span<const std::uint64_t> rows, std::uint64_t mask) {
  int best = 65;
  for (std::uint64_t row : rows) best = std::min(best, std::popcount(row & mask));
  return best;
}

int min_kappa(std::span<const std::uint8_t> cells, std::size_t rows, std::size_t cols,
              std::span<const std::int32_t> row_sums, std::span<const std::int32_t> col_sums) {
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < rows; ++i) {
    const std::uint8_t* row = cells.data() + i * cols;
    for (std::size_t j = 0; j < cols; ++j) {
      best = std::min(best, row_sums[i] + col_sums[j] - 2 * static_cast<int>(row[j]));
    }
  }
  return best;
}

}  // namespace ktds::kernels::scalar
