#include "tsb/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tsb/error.hpp"

namespace tsb {
namespace {

void check_vertex_list(int v, const std::vector<int>& list) {
  std::vector<char> seen(static_cast<std::size_t>(v), 0);
  for (int x : list) {
    if (x < 0 || x >= v) {
      throw InputError("vertex " + std::to_string(x) + " out of range [0, " +
                       std::to_string(v) + ")");
    }
    if (seen[static_cast<std::size_t>(x)]) {
      throw InputError("vertex " + std::to_string(x) + " listed twice");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

int popcount_words(const std::vector<std::uint64_t>& words) {
  int total = 0;
  for (std::uint64_t w : words) total += std::popcount(w);
  return total;
}

// Depth-first extension of domination chains over a relabeled graph.
class ChainSearch {
 public:
  ChainSearch(const Digraph& g, double time_limit_seconds,
              long long upper_cutoff)
      : g_(g),
        words_(g.words_per_row()),
        time_limit_(time_limit_seconds),
        cutoff_(upper_cutoff),
        start_(std::chrono::steady_clock::now()) {
    const int v = g.order();
    pool_.assign(static_cast<std::size_t>(v) + 1,
                 std::vector<std::uint64_t>(static_cast<std::size_t>(words_)));
    chain_.reserve(static_cast<std::size_t>(v));
  }

  SearchResult run() {
    const int v = g_.order();
    std::vector<std::uint64_t>& root = pool_[0];
    std::fill(root.begin(), root.end(), 0);
    for (int x = 0; x < v; ++x) {
      root[static_cast<std::size_t>(x >> 6)] |= std::uint64_t{1} << (x & 63);
    }
    extend(0);

    SearchResult result;
    result.max_size = best_;
    result.witness.assign(best_chain_.rbegin(), best_chain_.rend());
    result.nodes_explored = nodes_;
    result.method = "branch_bound";
    result.time_limited = time_limited_;
    return result;
  }

 private:
  void extend(int depth) {
    ++nodes_;
    if (time_limit_ > 0.0 && (nodes_ & 1023) == 0) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > time_limit_) {
        time_limited_ = true;
        stop_ = true;
      }
    }
    if (stop_) return;

    const std::vector<std::uint64_t>& cand = pool_[static_cast<std::size_t>(depth)];
    const int remaining = popcount_words(cand);
    if (static_cast<long long>(chain_.size()) + remaining <= best_) return;

    std::vector<std::uint64_t>& next = pool_[static_cast<std::size_t>(depth) + 1];
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = cand[static_cast<std::size_t>(w)];
      while (bits != 0) {
        const int z = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;

        // Every candidate is dominated by the whole chain, so appending z
        // and intersecting with out(z) keeps the invariant.  z stays in
        // the candidate set for later iterations: a set whose chain order
        // puts z deeper is reachable only that way.
        const std::span<const std::uint64_t> out = g_.out_row(z);
        for (int u = 0; u < words_; ++u) {
          next[static_cast<std::size_t>(u)] =
              cand[static_cast<std::size_t>(u)] & out[static_cast<std::size_t>(u)];
        }
        chain_.push_back(z);
        if (static_cast<long long>(chain_.size()) > best_) {
          best_ = static_cast<long long>(chain_.size());
          best_chain_ = chain_;
          if (cutoff_ > 0 && best_ >= cutoff_) stop_ = true;
        }
        if (!stop_) extend(depth + 1);
        chain_.pop_back();
        if (stop_) return;
      }
    }
  }

  const Digraph& g_;
  int words_ = 0;
  double time_limit_ = 0.0;
  long long cutoff_ = 0;
  std::chrono::steady_clock::time_point start_;

  std::vector<std::vector<std::uint64_t>> pool_;
  std::vector<int> chain_;
  std::vector<int> best_chain_;
  long long best_ = 0;
  unsigned long long nodes_ = 0;
  bool stop_ = false;
  bool time_limited_ = false;
};

}  // namespace

bool verify_transitive(const Digraph& g, const std::vector<int>& order) {
  check_vertex_list(g.order(), order);
  for (std::size_t j = 1; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!g.edge(order[j], order[i])) return false;
    }
  }
  return true;
}

bool is_transitive_set(const Digraph& g, const VertexSet& set) {
  if (set.universe() != g.order()) {
    throw InputError("vertex set universe " + std::to_string(set.universe()) +
                     " does not match graph order " +
                     std::to_string(g.order()));
  }
  const std::vector<int> members = set.members();
  const std::span<const std::uint64_t> mask = set.words();
  const int words = g.words_per_row();

  // Induced tournament: x must be adjacent (one way or the other) to every
  // other member.
  for (int x : members) {
    const std::span<const std::uint64_t> out = g.out_row(x);
    const std::span<const std::uint64_t> in = g.in_row(x);
    for (int w = 0; w < words; ++w) {
      std::uint64_t want = mask[static_cast<std::size_t>(w)];
      if (w == (x >> 6)) want &= ~(std::uint64_t{1} << (x & 63));
      if (((out[static_cast<std::size_t>(w)] | in[static_cast<std::size_t>(w)]) &
           want) != want) {
        return false;
      }
    }
  }

  // No directed 3-cycle: for an edge a -> b inside the set, no member z
  // with b -> z and z -> a.
  for (int a : members) {
    const std::span<const std::uint64_t> in_a = g.in_row(a);
    for (int b : members) {
      if (!g.edge(a, b) || !set.contains(b)) continue;
      const std::span<const std::uint64_t> out_b = g.out_row(b);
      for (int w = 0; w < words; ++w) {
        if ((out_b[static_cast<std::size_t>(w)] &
             in_a[static_cast<std::size_t>(w)] &
             mask[static_cast<std::size_t>(w)]) != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

SearchResult max_transitive_brute(const Digraph& g) {
  const int v = g.order();
  if (v > 20) {
    throw InputError("exhaustive subset search is limited to 20 vertices, got " +
                     std::to_string(v));
  }

  std::vector<std::uint32_t> out(static_cast<std::size_t>(v), 0);
  std::vector<std::uint32_t> in(static_cast<std::size_t>(v), 0);
  for (int x = 0; x < v; ++x) {
    out[static_cast<std::size_t>(x)] =
        static_cast<std::uint32_t>(g.out_row(x)[0]);
    in[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(g.in_row(x)[0]);
  }

  SearchResult result;
  result.method = "brute";
  long long best = 0;
  std::uint32_t best_mask = 0;

  const std::uint32_t limit = (std::uint32_t{1} << v) - 1;
  for (std::uint32_t mask = 1; mask <= limit; ++mask) {
    if (std::popcount(mask) <= best) continue;
    ++result.nodes_explored;

    bool ok = true;
    for (std::uint32_t rest = mask; ok && rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      const std::uint32_t others = mask & ~(std::uint32_t{1} << x);
      if (((out[static_cast<std::size_t>(x)] |
            in[static_cast<std::size_t>(x)]) &
           others) != others) {
        ok = false;  // missing comparability: not an induced tournament
      }
    }
    for (std::uint32_t rest = mask; ok && rest != 0; rest &= rest - 1) {
      const int a = std::countr_zero(rest);
      std::uint32_t heads = out[static_cast<std::size_t>(a)] & mask;
      while (ok && heads != 0) {
        const int b = std::countr_zero(heads);
        heads &= heads - 1;
        if ((out[static_cast<std::size_t>(b)] &
             in[static_cast<std::size_t>(a)] & mask) != 0) {
          ok = false;  // directed 3-cycle through a -> b
        }
      }
    }
    if (ok) {
      best = std::popcount(mask);
      best_mask = mask;
    }
  }

  result.max_size = best;
  std::vector<int> members;
  for (std::uint32_t rest = best_mask; rest != 0; rest &= rest - 1) {
    members.push_back(std::countr_zero(rest));
  }
  // In a transitive tournament the within-set out-degrees are pairwise
  // distinct, so sorting by them ascending is the domination order.
  std::sort(members.begin(), members.end(), [&](int a, int b) {
    return std::popcount(out[static_cast<std::size_t>(a)] & best_mask) <
           std::popcount(out[static_cast<std::size_t>(b)] & best_mask);
  });
  result.witness = members;
  return result;
}

SearchResult max_transitive_bb(const Digraph& g, double time_limit_seconds,
                               long long upper_cutoff) {
  const int v = g.order();

  // Relabel by descending out-degree (ties by original index): chains tend
  // to start at high out-degree vertices, so good chains are found early
  // and the candidate masks shrink fast.
  std::vector<int> perm(static_cast<std::size_t>(v));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return g.out_degree(a) > g.out_degree(b);
  });

  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      if (g.edge(perm[static_cast<std::size_t>(x)],
                 perm[static_cast<std::size_t>(y)])) {
        edges.emplace_back(x, y);
      }
    }
  }
  const Digraph relabeled = Digraph::from_edges(v, edges);

  ChainSearch search(relabeled, time_limit_seconds, upper_cutoff);
  SearchResult result = search.run();
  for (int& x : result.witness) x = perm[static_cast<std::size_t>(x)];
  return result;
}

BalanceReport balance_check(const Digraph& g, const std::vector<int>& witness) {
  if (!verify_transitive(g, witness)) {
    throw InputError(
        "witness is not a transitive subtournament in domination order");
  }
  const int v = g.order();
  std::vector<char> inside(static_cast<std::size_t>(v), 0);
  for (int x : witness) inside[static_cast<std::size_t>(x)] = 1;

  BalanceReport report;
  for (int x = 0; x < v; ++x) {
    if (inside[static_cast<std::size_t>(x)]) continue;
    BalanceEntry entry;
    entry.vertex = x;
    for (int y : witness) {
      if (g.edge(y, x)) ++entry.dominating;
      if (g.edge(x, y)) ++entry.dominated;
    }
    if (entry.dominating != entry.dominated) report.all_balanced = false;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace tsb
