#include "tsb/vertex_set.hpp"

#include <string>

#include "tsb/error.hpp"

namespace tsb {

VertexSet::VertexSet(int universe)
    : universe_(universe), bits_((universe + 63) / 64, 0) {
  if (universe < 0) throw InputError("vertex set universe must be >= 0");
}

VertexSet VertexSet::from_members(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int x : members) s.add(x);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int x = 0; x < universe; ++x) s.add(x);
  return s;
}

void VertexSet::add(int x) {
  if (x < 0 || x >= universe_) {
    throw InputError("vertex " + std::to_string(x) + " out of range for " +
                     std::to_string(universe_) + " vertices");
  }
  if (!contains(x)) {
    bits_[x >> 6] |= 1ull << (x & 63);
    ++size_;
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size_);
  for (int x = 0; x < universe_; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

}  // namespace tsb
