#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tsb {

// Dense digraph on vertices 0..v-1, stored as one bitset row per vertex for
// both out-neighbors and in-neighbors. Loops and 2-cycles are rejected at
// construction, so every instance is an orientation of a simple graph.
// Immutable after construction.
class Digraph {
 public:
  // Incremental construction with per-edge validation; defined below.
  class Builder;

  // Validates a square 0/1 matrix; adj[x][y] == 1 means edge x -> y.
  static Digraph from_matrix(const std::vector<std::vector<int>>& adj);
  static Digraph from_edges(int v,
                            std::span<const std::pair<int, int>> edges);

  int order() const { return v_; }
  int words_per_row() const { return words_; }

  bool edge(int x, int y) const {
    return (out_[static_cast<std::size_t>(x) * words_ + (y >> 6)] >>
            (y & 63)) &
           1u;
  }
  int out_degree(int x) const;
  int in_degree(int x) const;

  std::span<const std::uint64_t> out_row(int x) const {
    return {&out_[static_cast<std::size_t>(x) * words_],
            static_cast<std::size_t>(words_)};
  }
  std::span<const std::uint64_t> in_row(int x) const {
    return {&in_[static_cast<std::size_t>(x) * words_],
            static_cast<std::size_t>(words_)};
  }

  // Induced subgraph on all vertices except x; labels above x shift down.
  Digraph without_vertex(int x) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  explicit Digraph(int v);
  void set_edge_unchecked(int x, int y);

  int v_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

class Digraph::Builder {
 public:
  explicit Builder(int v);
  // Adds edge x -> y. Throws InputError on out-of-range vertices, loops
  // (x == y) and 2-cycles (y -> x already present).
  void add_edge(int x, int y);
  bool has_edge(int x, int y) const;
  Digraph take();

 private:
  Digraph g_;
  bool taken_ = false;
};

// Classification flags; the doubly-regular fields are set only when the
// digraph is a regular tournament whose vertex pairs jointly dominate a
// constant number of vertices.
struct DigraphClass {
  bool is_tournament = false;
  bool is_regular = false;
  std::optional<long> regular_degree;
  bool is_doubly_regular = false;
  std::optional<long> lambda;  // constant pair domination count, (v-3)/4
  std::optional<long> m;       // v = 4m - 1
};

DigraphClass classify(const Digraph& g);

// Transitive tournament on s vertices: edge (i, j) present iff i > j.
Digraph transitive_tournament(int s);

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0; needs n >= 3.
Digraph directed_cycle(int n);

}  // namespace tsb
