#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tsb {

// Subset of vertices 0..universe-1 as a bitset; size is kept in sync.
class VertexSet {
 public:
  explicit VertexSet(int universe);
  static VertexSet from_members(int universe, std::span<const int> members);
  static VertexSet full(int universe);

  void add(int x);
  bool contains(int x) const {
    return (bits_[x >> 6] >> (x & 63)) & 1u;
  }

  int universe() const { return universe_; }
  int size() const { return size_; }
  std::span<const std::uint64_t> words() const { return bits_; }
  std::vector<int> members() const;

 private:
  int universe_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace tsb
