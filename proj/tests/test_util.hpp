#pragma once

#include <random>

#include "tsb/digraph.hpp"

namespace testutil {

// Uniform random tournament: every unordered pair gets one direction.
inline tsb::Digraph random_tournament(int v, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.5);
  tsb::Digraph::Builder b(v);
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      if (coin(rng)) {
        b.add_edge(x, y);
      } else {
        b.add_edge(y, x);
      }
    }
  }
  return b.take();
}

// Random orientation where each unordered pair is joined with the given
// probability (and then directed uniformly), so non-tournament digraphs are
// covered too.
inline tsb::Digraph random_digraph(int v, double edge_probability,
                                   unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  tsb::Digraph::Builder b(v);
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      const double r = u(rng);
      if (r < edge_probability / 2) {
        b.add_edge(x, y);
      } else if (r < edge_probability) {
        b.add_edge(y, x);
      }
    }
  }
  return b.take();
}

}  // namespace testutil
