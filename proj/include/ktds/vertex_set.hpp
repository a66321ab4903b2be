#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ktds {

/// Subset of the vertices 0..universe-1 of some graph, stored as a dense bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static VertexSet from_indices(std::size_t universe, std::span<const std::size_t> members);
  /// Low `universe` bits of `bits`; universe must be <= 64.
  static VertexSet from_word(std::size_t universe, std::uint64_t bits);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(std::size_t v) const;
  void insert(std::size_t v);
  void erase(std::size_t v);

  std::vector<std::size_t> indices() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  /// First 64 members as a word (the whole set when universe <= 64).
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  /// "{0, 3, 5}"
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ktds
