#pragma once

// Data-parallel inner loops shared by the solvers. Each kernel has a scalar reference
// version and, on x86-64, an AVX2 version; the dispatching entry points pick the best
// variant the CPU supports at first use. KTDS_ISA=scalar|avx2 in the environment overrides
// the choice (an unsupported request falls back to scalar).

#include <cstddef>
#include <cstdint>
#include <span>

namespace ktds::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;
Isa active_isa() noexcept;
/// Switches the dispatch table; throws InvalidArgument if the CPU lacks `isa`.
void set_active_isa(Isa isa);

/// counts[i] = popcount(rows[i] & mask). counts.size() must be >= rows.size().
void masked_popcounts(std::span<const std::uint64_t> rows, std::uint64_t mask,
                      std::span<std::int32_t> counts);

/// min over i of popcount(rows[i] & mask); 65 for an empty span.
int min_masked_popcount(std::span<const std::uint64_t> rows, std::uint64_t mask);

/// Minimum over all cells of row_sums[i] + col_sums[j] - 2*cells[i*cols + j] for a
/// row-major 0/1 byte matrix. Requires rows, cols >= 1.
int min_kappa(std::span<const std::uint8_t> cells, std::size_t rows, std::size_t cols,
              std::span<const std::int32_t> row_sums, std::span<const std::int32_t> col_sums);

namespace scalar {
void masked_popcounts(std::span<const std::uint64_t> rows, std::uint64_t mask,
                      std::span<std::int32_t> counts);
int min_masked_popcount(std::span<const std::uint64_t> rows, std::uint64_t mask);
int min_kappa(std::span<const std::uint8_t> cells, std::size_t rows, std::size_t cols,
              std::span<const std::int32_t> row_sums, std::span<const std::int32_t> col_sums);
}  // namespace scalar

#if defined(KTDS_HAVE_AVX2)
namespace avx2 {
void masked_popcounts(std::span<const std::uint64_t> rows, std::uint64_t mask,
                      std::span<std::int32_t> counts);
int min_masked_popcount(std::span<const std::uint64_t> rows, std::uint64_t mask);
int min_kappa(std::span<const std::uint8_t> cells, std::size_t rows, std::size_t cols,
              std::span<const std::int32_t> row_sums, std::span<const std::int32_t> col_sums);
}  // namespace avx2
#endif

}  // namespace ktds::kernels
