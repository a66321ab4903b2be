#include <algorithm>

#include "ktds/rook.hpp"

namespace ktds {

const char* case_name(Gamma2CaseId id) noexcept {
  switch (id) {
    case Gamma2CaseId::undefined:
      return "undefined";
    case Gamma2CaseId::n1:
      return "n1";
    case Gamma2CaseId::wide_2n:
      return "wide_2n";
    case Gamma2CaseId::mod8_plus1:
      return "mod8_plus1";
    case Gamma2CaseId::ceil34:
      return "ceil34";
  }
  return "unknown";
}

Gamma2Case gamma2_rook_formula(std::size_t rows, std::size_t cols) {
  const auto n = static_cast<long>(std::min(rows, cols));
  const auto m = static_cast<long>(std::max(rows, cols));
  if (n < 1 || (n == 1 && m <= 2)) return {Gamma2CaseId::undefined, std::nullopt};
  if (n == 1) return {Gamma2CaseId::n1, 3};
  if (m >= (5 * n - 4) / 3 + 1) return {Gamma2CaseId::wide_2n, static_cast<int>(2 * n)};
  const int base = static_cast<int>((3 * (n + m) + 3) / 4);
  if (m % 8 == (3 * n + 4) % 8) return {Gamma2CaseId::mod8_plus1, base + 1};
  return {Gamma2CaseId::ceil34, base};
}

std::optional<int> gamma_rook_manycols(std::size_t rows, std::size_t cols, int k) {
  const auto n = static_cast<long>(std::min(rows, cols));
  const auto m = static_cast<long>(std::max(rows, cols));
  if (k < 1) return std::nullopt;
  if (n == 1 && m >= k + 1) return k + 1;
  if (n >= 2 && m >= k * n - 1) return static_cast<int>(k * n);
  return std::nullopt;
}

std::optional<int> gamma_rook_manycols_upper(std::size_t rows, std::size_t cols, int k) {
  const auto n = static_cast<long>(std::min(rows, cols));
  const auto m = static_cast<long>(std::max(rows, cols));
  if (k < 1 || n < 2 || m < k) return std::nullopt;
  return static_cast<int>(k * n);
}

}  // namespace ktds
