#include "tsb/digraph.hpp"

#include <bit>
#include <string>

#include "tsb/error.hpp"

namespace tsb {
namespace {

int words_for(int v) {
  if (v < 1) throw InputError("vertex count must be positive");
  return (v + 63) / 64;
}

int popcount_row(std::span<const std::uint64_t> row) {
  int n = 0;
  for (std::uint64_t w : row) n += std::popcount(w);
  return n;
}

}  // namespace

Digraph::Digraph(int v)
    : v_(v),
      words_(words_for(v)),
      out_(static_cast<std::size_t>(v) * words_, 0),
      in_(static_cast<std::size_t>(v) * words_, 0) {}

void Digraph::set_edge_unchecked(int x, int y) {
  out_[static_cast<std::size_t>(x) * words_ + (y >> 6)] |= 1ull << (y & 63);
  in_[static_cast<std::size_t>(y) * words_ + (x >> 6)] |= 1ull << (x & 63);
}

Digraph::Builder::Builder(int v) : g_(v) {}

void Digraph::Builder::add_edge(int x, int y) {
  const int v = g_.order();
  if (x < 0 || x >= v || y < 0 || y >= v) {
    throw InputError("edge (" + std::to_string(x) + ", " + std::to_string(y) +
                     ") out of range for " + std::to_string(v) + " vertices");
  }
  if (x == y) throw InputError("loop at vertex " + std::to_string(x));
  if (g_.edge(y, x)) {
    throw InputError("2-cycle at (" + std::to_string(y) + ", " +
                     std::to_string(x) + ")");
  }
  g_.set_edge_unchecked(x, y);
}

bool Digraph::Builder::has_edge(int x, int y) const { return g_.edge(x, y); }

Digraph Digraph::Builder::take() {
  if (taken_) throw std::logic_error("Builder::take called twice");
  taken_ = true;
  return std::move(g_);
}

Digraph Digraph::from_matrix(const std::vector<std::vector<int>>& adj) {
  const int v = static_cast<int>(adj.size());
  Builder b(v);
  for (int x = 0; x < v; ++x) {
    if (static_cast<int>(adj[x].size()) != v) {
      throw InputError("matrix is not square: row " + std::to_string(x) +
                       " has " + std::to_string(adj[x].size()) +
                       " entries, expected " + std::to_string(v));
    }
    for (int y = 0; y < v; ++y) {
      if (adj[x][y] == 0) continue;
      if (adj[x][y] != 1) {
        throw InputError("matrix entry (" + std::to_string(x) + ", " +
                         std::to_string(y) + ") is not 0 or 1");
      }
      b.add_edge(x, y);
    }
  }
  return b.take();
}

Digraph Digraph::from_edges(int v,
                            std::span<const std::pair<int, int>> edges) {
  Builder b(v);
  for (const auto& [x, y] : edges) b.add_edge(x, y);
  return b.take();
}

int Digraph::out_degree(int x) const { return popcount_row(out_row(x)); }
int Digraph::in_degree(int x) const { return popcount_row(in_row(x)); }

Digraph Digraph::without_vertex(int x) const {
  if (x < 0 || x >= v_) {
    throw InputError("vertex " + std::to_string(x) + " out of range");
  }
  if (v_ == 1) throw InputError("cannot delete the only vertex");
  Digraph h(v_ - 1);
  for (int a = 0; a < v_; ++a) {
    if (a == x) continue;
    for (int b = 0; b < v_; ++b) {
      if (b == x || !edge(a, b)) continue;
      h.set_edge_unchecked(a - (a > x), b - (b > x));
    }
  }
  return h;
}

DigraphClass classify(const Digraph& g) {
  const int v = g.order();
  const int words = g.words_per_row();
  DigraphClass c;

  // A tournament joins every pair by exactly one edge; since 2-cycles are
  // excluded at construction, this is equivalent to out | in covering all
  // vertices except the vertex itself.
  c.is_tournament = true;
  for (int x = 0; x < v && c.is_tournament; ++x) {
    auto out = g.out_row(x);
    auto in = g.in_row(x);
    for (int w = 0; w < words; ++w) {
      std::uint64_t expect = ~0ull;
      if (w == words - 1 && (v & 63) != 0) expect = (1ull << (v & 63)) - 1;
      if ((x >> 6) == w) expect &= ~(1ull << (x & 63));
      if ((out[w] | in[w]) != expect) {
        c.is_tournament = false;
        break;
      }
    }
  }

  c.is_regular = true;
  const int out0 = g.out_degree(0);
  const int in0 = g.in_degree(0);
  for (int x = 0; x < v; ++x) {
    if (g.out_degree(x) != out0 || g.in_degree(x) != in0) {
      c.is_regular = false;
      break;
    }
  }
  // All out-degrees equal and all in-degrees equal force the two constants
  // to coincide (both sum to the edge count).
  if (c.is_regular) c.regular_degree = out0;

  // Doubly regular: regular tournament on v = 3 (mod 4) vertices where
  // every vertex pair jointly dominates exactly (v-3)/4 vertices.
  if (c.is_tournament && c.is_regular && v % 4 == 3) {
    const long lambda = (v - 3) / 4;
    bool constant = true;
    for (int a = 0; a < v && constant; ++a) {
      auto ra = g.out_row(a);
      for (int b = a + 1; b < v && constant; ++b) {
        auto rb = g.out_row(b);
        int common = 0;
        for (int w = 0; w < words; ++w) {
          common += std::popcount(ra[w] & rb[w]);
        }
        if (common != lambda) constant = false;
      }
    }
    if (constant) {
      c.is_doubly_regular = true;
      c.lambda = lambda;
      c.m = (v + 1) / 4;
    }
  }
  return c;
}

Digraph transitive_tournament(int s) {
  Digraph::Builder b(s);
  for (int i = 1; i < s; ++i) {
    for (int j = 0; j < i; ++j) b.add_edge(i, j);
  }
  return b.take();
}

Digraph directed_cycle(int n) {
  if (n < 3) {
    throw InputError("directed cycle needs at least 3 vertices (got " +
                     std::to_string(n) + ")");
  }
  Digraph::Builder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.take();
}

}  // namespace tsb
