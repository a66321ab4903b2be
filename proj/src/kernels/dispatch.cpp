#include <atomic>
#include <cstdlib>
#include <string_view>

#include "ktds/error.hpp"
#include "ktds/kernels.hpp"

namespace ktds::kernels {

namespace {

struct Table {
  Isa isa;
  void (*masked_popcounts)(std::span<const std::uint64_t>, std::uint64_t, std::span<std::int32_t>);
  int (*min_masked_popcount)(std::span<const std::uint64_t>, std::uint64_t);
  int (*min_kappa)(std::span<const std::uint8_t>, std::size_t, std::size_t, std::span<const std::int32_t>,
                   std::span<const std::int32_t>);
};

constexpr Table kScalar{Isa::scalar, &scalar::masked_popcounts, &scalar::min_masked_popcount,
                        &scalar::min_kappa};
#if defined(KTDS_HAVE_AVX2)
constexpr Table kAvx2{Isa::avx2, &avx2::masked_popcounts, &avx2::min_masked_popcount, &avx2::min_kappa};
#endif

const Table* table_for(Isa isa) {
#if defined(KTDS_HAVE_AVX2)
  if (isa == Isa::avx2) return &kAvx2;
#endif
  (void)isa;
  return &kScalar;
}

const Table* initial_table() {
  Isa wanted = isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  if (const char* env = std::getenv("KTDS_ISA")) {
    const std::string_view v(env);
    if (v == "scalar") wanted = Isa::scalar;
    if (v == "avx2" && isa_supported(Isa::avx2)) wanted = Isa::avx2;
  }
  return table_for(wanted);
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{initial_table()};
  return table;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(KTDS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed)->isa; }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw InvalidArgument(std::string("kernel ISA not supported: ") + isa_name(isa));
  current().store(table_for(isa), std::memory_order_relaxed);
}

void masked_popcounts(std::span<const std::uint64_t> rows, std::uint64_t mask, std::span<std::int32_t> counts) {
  current().load(std::memory_order_relaxed)->masked_popcounts(rows, mask, counts);
}

int min_masked_popcount(std::span<const std::uint64_t> rows, std::uint64_t mask) {
  return current().load(std::memory_order_relaxed)->min_masked_popcount(rows, mask);
}

int min_kappa(std::span<const std::uint8_t> cells, std::size_t rows, std::size_t cols,
              std::span<const std::int32_t> row_sums, std::span<const std::int32_t> col_sums) {
  return current().load(std::memory_order_relaxed)->min_kappa(cells, rows, cols, row_sums, col_sums);
}

}  // namespace ktds::kernels
