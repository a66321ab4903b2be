#include <doctest.h>

#include <random>
#include <vector>

#include "ktds/error.hpp"
#include "ktds/kernels.hpp"

using namespace ktds;
namespace kn = ktds::kernels;

namespace {

std::vector<std::uint64_t> random_rows(std::mt19937_64& rng, std::size_t count) {
  std::vector<std::uint64_t> rows(count);
  for (auto& r : rows) {
    // Mix dense, sparse and extreme words.
    switch (rng() % 4) {
      case 0:
        r = rng();
        break;
      case 1:
        r = rng() & rng() & rng();
        break;
      case 2:
        r = ~std::uint64_t{0};
        break;
      default:
        r = 0;
    }
  }
  return rows;
}

}  // namespace

TEST_CASE("scalar masked popcounts") {
  const std::vector<std::uint64_t> rows{0b1011, 0, ~std::uint64_t{0}};
  std::vector<std::int32_t> counts(3);
  kn::scalar::masked_popcounts(rows, 0b0011, counts);
  CHECK(counts == std::vector<std::int32_t>{2, 0, 2});
  CHECK(kn::scalar::min_masked_popcount(rows, ~std::uint64_t{0}) == 0);
  CHECK(kn::scalar::min_masked_popcount({}, 1) == 65);
}

TEST_CASE("scalar min kappa") {
  // Rows 0100 / 1111 / 0100: kappa(0,0) = 1 + 1 - 0.
  const std::vector<std::uint8_t> cells{0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0};
  const std::vector<std::int32_t> rows{1, 4, 1};
  const std::vector<std::int32_t> cols{1, 3, 1, 1};
  CHECK(kn::scalar::min_kappa(cells, 3, 4, rows, cols) == 2);
}

#if defined(KTDS_HAVE_AVX2)
TEST_CASE("AVX2 kernels agree with scalar kernels") {
  if (!kn::isa_supported(kn::Isa::avx2)) {
    MESSAGE("CPU lacks AVX2; skipping");
    return;
  }
  std::mt19937_64 rng(12345);
  for (std::size_t len = 0; len <= 70; ++len) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto rows = random_rows(rng, len);
      const std::uint64_t mask = trial % 5 == 0 ? ~std::uint64_t{0} : rng();
      std::vector<std::int32_t> a(len + 1, -7);
      std::vector<std::int32_t> b(len + 1, -7);
      kn::scalar::masked_popcounts(rows, mask, a);
      kn::avx2::masked_popcounts(rows, mask, b);
      REQUIRE(a == b);  // including the untouched sentinel past the end
      REQUIRE(kn::scalar::min_masked_popcount(rows, mask) == kn::avx2::min_masked_popcount(rows, mask));
    }
  }
  for (std::size_t r = 1; r <= 12; ++r) {
    for (std::size_t c = 1; c <= 20; ++c) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::uint8_t> cells(r * c);
        std::vector<std::int32_t> row_sums(r, 0);
        std::vector<std::int32_t> col_sums(c, 0);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < c; ++j) {
            cells[i * c + j] = static_cast<std::uint8_t>(rng() % 3 == 0);
            row_sums[i] += cells[i * c + j];
            col_sums[j] += cells[i * c + j];
          }
        }
        REQUIRE(kn::scalar::min_kappa(cells, r, c, row_sums, col_sums) ==
                kn::avx2::min_kappa(cells, r, c, row_sums, col_sums));
      }
    }
  }
}
#endif

TEST_CASE("dispatch can be switched") {
  const kn::Isa original = kn::active_isa();
  kn::set_active_isa(kn::Isa::scalar);
  CHECK(kn::active_isa() == kn::Isa::scalar);
  const std::vector<std::uint64_t> rows{0xff, 0x0f};
  CHECK(kn::min_masked_popcount(rows, 0x3c) == 2);
  if (kn::isa_supported(kn::Isa::avx2)) {
    kn::set_active_isa(kn::Isa::avx2);
    CHECK(kn::active_isa() == kn::Isa::avx2);
    CHECK(kn::min_masked_popcount(rows, 0x3c) == 2);
  } else {
    CHECK_THROWS_AS(kn::set_active_isa(kn::Isa::avx2), InvalidArgument);
  }
  kn::set_active_isa(original);
  CHECK(std::string(kn::isa_name(kn::Isa::scalar)) == "scalar");
  CHECK(std::string(kn::isa_name(kn::Isa::avx2)) == "avx2");
}
