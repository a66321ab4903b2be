// Compiled with -mavx2 -mpopcnt; only called after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <limits>

#include "ktds/kernels.hpp"

namespace ktds::kernels::avx2 {

namespace {

// Per-64-bit-lane popcount: nibble lookup with vpshufb, then vpsadbw sums the bytes.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline int horizontal_min_epi32(__m256i v) {
  __m128i m = _mm_min_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

}  // namespace

void masked_popcounts(std::span<const std::uint64_t> rows, std::uint64_t mask,
                      std::span<std::int32_t> counts) {
  const __m256i vmask = _mm256_set1_epi64x(static_cast<long long>(mask));
  // Gathers the low 32 bits of each 64-bit lane into the lower 128 bits.
  const __m256i compact = _mm256_setr_epi32(0, 2, 4, 6, 0, 2, 4, 6);
  std::size_t i = 0;
  for (; i + 4 <= rows.size(); i += 4) {
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows.data() + i));
    const __m256i pc = popcount_epi64(_mm256_and_si256(r, vmask));
    const __m256i packed = _mm256_permutevar8x32_epi32(pc, compact);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(counts.data() + i), _mm256_castsi256_si128(packed));
  }
  for (; i < rows.size(); ++i) counts[i] = std::popcount(rows[i] & mask);
}

int min_masked_popcount(std::span<const std::uint64_t> rows, std::uint64_t mask) {
  const __m256i vmask = _mm256_set1_epi64x(static_cast<long long>(mask));
  // Upper 32 bits of each lane are zero after vpsadbw; fill them so they never win the min.
  const __m256i high_fill = _mm256_set1_epi64x(0x7fffffff00000000LL);
  __m256i best = _mm256_set1_epi32(65);
  std::size_t i = 0;
  for (; i + 4 <= rows.size(); i += 4) {
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows.data() + i));
    const __m256i pc = _mm256_or_si256(popcount_epi64(_mm256_and_si256(r, vmask)), high_fill);
    best = _mm256_min_epi32(best, pc);
  }
  int result = horizontal_min_epi32(best);
  for (; i < rows.size(); ++i) result = std::min(result, std::popcount(rows[i] & mask));
  return result;
}

int min_kappa(std::span<const std::uint8_t> cells, std::size_t rows, std::size_t cols,
              std::span<const std::int32_t> row_sums, std::span<const std::int32_t> col_sums) {
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < rows; ++i) {
    const std::uint8_t* row = cells.data() + i * cols;
    __m256i row_best = _mm256_set1_epi32(std::numeric_limits<int>::max());
    std::size_t j = 0;
    for (; j + 8 <= cols; j += 8) {
      const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col_sums.data() + j));
      const __m256i m = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(row + j)));
      row_best = _mm256_min_epi32(row_best, _mm256_sub_epi32(c, _mm256_slli_epi32(m, 1)));
    }
    int partial = horizontal_min_epi32(row_best);
    for (; j < cols; ++j) partial = std::min(partial, col_sums[j] - 2 * static_cast<int>(row[j]));
    best = std::min(best, row_sums[i] + partial);
  }
  return best;
}

}  // namespace ktds::kernels::avx2
