#pragma once

#include <string>
#include <vector>

#include "tsb/digraph.hpp"
#include "tsb/vertex_set.hpp"

namespace tsb {

struct SearchResult {
  long long max_size = 0;
  std::vector<int> witness;  // passes verify_transitive
  unsigned long long nodes_explored = 0;
  std::string method;  // "brute" or "branch_bound"
  bool time_limited = false;
};

// True iff edge (order[j], order[i]) is present for every i < j — the
// induced adjacency matrix is strictly lower triangular under this
// ordering.  Throws InputError on repeated or out-of-range vertices.
bool verify_transitive(const Digraph& g, const std::vector<int>& order);

// Order-free test: the induced subdigraph is a tournament containing no
// directed 3-cycle.
bool is_transitive_set(const Digraph& g, const VertexSet& set);

// Exhaustive scan over all vertex subsets; the oracle the other search is
// validated against.  Guarded to v <= 20.
SearchResult max_transitive_brute(const Digraph& g);

// Depth-first chain extension: the candidate set for the next vertex is
// the running bitwise intersection of the out-neighborhoods of the chain
// members, so every new vertex is dominated by all of them and each
// transitive set is generated by exactly one chain.  Branches are cut when
// |chain| + |candidates| cannot beat the best found, and the whole search
// stops once `upper_cutoff` (a proven upper bound, 0 = none) is reached.
// Vertices are explored in descending out-degree order (ties by index),
// which makes the search deterministic.
//
// A nonzero time limit returns the best found so far with time_limited
// set; such results are lower bounds only.
SearchResult max_transitive_bb(const Digraph& g,
                               double time_limit_seconds = 0.0,
                               long long upper_cutoff = 0);

// Domination balance of every vertex outside a transitive subtournament:
// dominating = |{y in witness : (y,x) in E}|, dominated likewise for
// (x,y).  all_balanced (every outside vertex split evenly) is exactly the
// condition under which ||K chi||^2 attains s(s^2-1)/3.
struct BalanceEntry {
  int vertex = 0;
  int dominating = 0;
  int dominated = 0;
};

struct BalanceReport {
  std::vector<BalanceEntry> entries;
  bool all_balanced = true;
};

BalanceReport balance_check(const Digraph& g,
                            const std::vector<int>& witness);

}  // namespace tsb
