#include "ktds/vertex_set.hpp"

#include <bit>

#include "ktds/error.hpp"

namespace ktds {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : VertexSet(universe) {
  for (std::size_t v : members) insert(v);
}

VertexSet VertexSet::from_indices(std::size_t universe, std::span<const std::size_t> members) {
  VertexSet s(universe);
  for (std::size_t v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from_word(std::size_t universe, std::uint64_t bits) {
  if (universe > 64) throw InvalidArgument("VertexSet::from_word: universe exceeds 64");
  VertexSet s(universe);
  if (universe == 0) return s;
  const std::uint64_t mask = universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
  if ((bits & ~mask) != 0) throw InvalidArgument("VertexSet::from_word: bit outside universe");
  s.words_[0] = bits;
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t count = 0;
  for (std::uint64_t w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool VertexSet::contains(std::size_t v) const {
  if (v >= universe_) return false;
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(std::size_t v) {
  if (v >= universe_) {
    throw InvalidArgument("VertexSet: index " + std::to_string(v) + " out of range " +
                          std::to_string(universe_));
  }
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(std::size_t v) {
  if (v >= universe_) return;
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<std::size_t> VertexSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t v : indices()) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace ktds
