#include <algorithm>
#include <array>

#include "ktds/error.hpp"
#include "ktds/rook.hpp"

namespace ktds {

namespace {

/// Optional leading blocks: a column of `tall` ones (J(tall,1)) and/or a row of `wide`
/// ones (J(1,wide)); zero means absent.
struct Special {
  std::size_t tall = 0;
  std::size_t wide = 0;

  std::size_t rows() const { return tall + (wide > 0 ? 1 : 0); }
  std::size_t cols() const { return wide + (tall > 0 ? 1 : 0); }
  std::size_t ones() const { return tall + wide; }
};

std::vector<Special> special_options() {
  std::vector<Special> out{{}};
  for (std::size_t x = 4; x <= 7; ++x) out.push_back({x, 0});
  for (std::size_t y = 4; y <= 7; ++y) out.push_back({0, y});
  for (std::size_t x = 4; x <= 5; ++x) {
    for (std::size_t y = 4; y <= 5; ++y) out.push_back({x, y});
  }
  return out;
}

/// Block-diagonal layout for n <= m: the special blocks, then `a` copies of J(3,1), then
/// `b` copies of J(1,3), where n = rows(special) + 3a + b and m = cols(special) + a + 3b.
std::optional<ZeroOneMatrix> block_diagonal(std::size_t n, std::size_t m, int target) {
  for (const Special& s : special_options()) {
    if (s.rows() > n || s.cols() > m) continue;
    const auto rn = static_cast<long>(n - s.rows());
    const auto rm = static_cast<long>(m - s.cols());
    const long a8 = 3 * rn - rm;
    const long b8 = 3 * rm - rn;
    if (a8 < 0 || b8 < 0 || a8 % 8 != 0 || b8 % 8 != 0) continue;
    const long a = a8 / 8;
    const long b = b8 / 8;
    if (static_cast<long>(s.ones()) + 3 * (a + b) != target) continue;

    ZeroOneMatrix out(n, m);
    std::size_t r = 0;
    std::size_t c = 0;
    if (s.tall > 0) {
      for (std::size_t t = 0; t < s.tall; ++t) out.set(r + t, c, true);
      r += s.tall;
      c += 1;
    }
    if (s.wide > 0) {
      for (std::size_t t = 0; t < s.wide; ++t) out.set(r, c + t, true);
      r += 1;
      c += s.wide;
    }
    for (long t = 0; t < a; ++t, r += 3, c += 1) {
      for (std::size_t d = 0; d < 3; ++d) out.set(r + d, c, true);
    }
    for (long t = 0; t < b; ++t, r += 1, c += 3) {
      for (std::size_t d = 0; d < 3; ++d) out.set(r, c + d, true);
    }
    return out;
  }
  return std::nullopt;
}

ZeroOneMatrix build_oriented(std::size_t n, std::size_t m, int target) {
  if (n == 2 && m == 2) return make_J(2, 2);
  if (n == 3 && m == 3) return make_B(3, 3);
  if (n == 1) {
    ZeroOneMatrix out(1, m);
    for (std::size_t j = 0; j < 3; ++j) out.set(0, j, true);
    return out;
  }
  if (gamma2_rook_formula(n, m).case_id == Gamma2CaseId::wide_2n) {
    ZeroOneMatrix out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      out.set(i, 0, true);
      out.set(i, 1, true);
    }
    return out;
  }
  if (auto out = block_diagonal(n, m, target)) return *out;
  throw NoConstructionFound("no block layout with " + std::to_string(target) + " ones for " + std::to_string(n) +
                            "x" + std::to_string(m));
}

}  // namespace

ZeroOneMatrix build_min_2tds(std::size_t n, std::size_t m) {
  const Gamma2Case formula = gamma2_rook_formula(n, m);
  if (!formula.value) {
    throw InvalidArgument("no 2-tuple total dominating set for " + std::to_string(n) + "x" + std::to_string(m));
  }
  if (n <= m) return build_oriented(n, m, *formula.value);
  return build_oriented(m, n, *formula.value).transpose();
}

}  // namespace ktds
