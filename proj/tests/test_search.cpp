#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "test_util.hpp"
#include "tsb/digraph.hpp"
#include "tsb/error.hpp"
#include "tsb/paley.hpp"
#include "tsb/search.hpp"
#include "tsb/spectral.hpp"
#include "tsb/vertex_set.hpp"

using tsb::Digraph;
using tsb::InputError;
using tsb::SearchResult;
using tsb::VertexSet;

namespace {

// Reference implementation of the order-free transitivity test: some
// permutation of the members must pass verify_transitive.
bool any_order_transitive(const Digraph& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  do {
    if (tsb::verify_transitive(g, members)) return true;
  } while (std::next_permutation(members.begin(), members.end()));
  return false;
}

void check_result(const Digraph& g, const SearchResult& r) {
  CHECK(r.max_size >= 1);
  CHECK(r.max_size <= g.order());
  CHECK(static_cast<long long>(r.witness.size()) == r.max_size);
  CHECK(tsb::verify_transitive(g, r.witness));
  CHECK(r.nodes_explored > 0);
}

}  // namespace

TEST_CASE("verify_transitive") {
  const Digraph t3 = tsb::transitive_tournament(3);
  CHECK(tsb::verify_transitive(t3, {0, 1, 2}));
  CHECK(tsb::verify_transitive(t3, {0, 2}));
  CHECK_FALSE(tsb::verify_transitive(t3, {2, 1, 0}));
  CHECK(tsb::verify_transitive(t3, {}));
  CHECK(tsb::verify_transitive(t3, {1}));

  const Digraph c3 = tsb::directed_cycle(3);
  CHECK_FALSE(tsb::verify_transitive(c3, {0, 1, 2}));
  CHECK_FALSE(tsb::verify_transitive(c3, {1, 2, 0}));
  CHECK_FALSE(tsb::verify_transitive(c3, {2, 1, 0}));
  // Single edges are fine in the dominated-first order.
  CHECK(tsb::verify_transitive(c3, {1, 0}));
  CHECK_FALSE(tsb::verify_transitive(c3, {0, 1}));

  CHECK_THROWS_WITH_AS(tsb::verify_transitive(t3, {0, 0}),
                       "vertex 0 listed twice", InputError);
  CHECK_THROWS_AS(tsb::verify_transitive(t3, {0, 3}), InputError);
  CHECK_THROWS_AS(tsb::verify_transitive(t3, {-1}), InputError);
}

TEST_CASE("is_transitive_set matches the permutation oracle") {
  const Digraph c3 = tsb::directed_cycle(3);
  CHECK_FALSE(tsb::is_transitive_set(c3, VertexSet::full(3)));
  CHECK(tsb::is_transitive_set(
      c3, VertexSet::from_members(3, std::vector<int>{0, 1})));

  // Non-adjacent pairs are not transitive subtournaments.
  Digraph::Builder b(2);
  const Digraph empty2 = b.take();
  CHECK_FALSE(tsb::is_transitive_set(empty2, VertexSet::full(2)));

  const Digraph t5 = tsb::transitive_tournament(5);
  for (int mask = 0; mask < 32; ++mask) {
    VertexSet set(5);
    for (int x = 0; x < 5; ++x) {
      if ((mask >> x) & 1) set.add(x);
    }
    CHECK(tsb::is_transitive_set(t5, set));
  }

  for (unsigned seed = 0; seed < 6; ++seed) {
    const Digraph g = testutil::random_tournament(6, 100u + seed);
    for (int mask = 0; mask < 64; ++mask) {
      std::vector<int> members;
      VertexSet set(6);
      for (int x = 0; x < 6; ++x) {
        if ((mask >> x) & 1) {
          set.add(x);
          members.push_back(x);
        }
      }
      if (members.size() > 4) continue;  // keep the permutation oracle cheap
      CHECK(tsb::is_transitive_set(g, set) ==
            any_order_transitive(g, members));
    }
  }

  CHECK_THROWS_AS(tsb::is_transitive_set(c3, VertexSet(4)), InputError);
}

TEST_CASE("exhaustive search landmarks") {
  CHECK(tsb::max_transitive_brute(tsb::paley_tournament(7, 1)).max_size == 3);
  CHECK(tsb::max_transitive_brute(tsb::paley_tournament(11, 1)).max_size == 4);
  CHECK(tsb::max_transitive_brute(tsb::paley_tournament(19, 1)).max_size == 5);
  CHECK(tsb::max_transitive_brute(tsb::directed_cycle(3)).max_size == 2);
  CHECK(tsb::max_transitive_brute(tsb::directed_cycle(9)).max_size == 2);
  CHECK(tsb::max_transitive_brute(tsb::transitive_tournament(8)).max_size ==
        8);

  const SearchResult r = tsb::max_transitive_brute(tsb::paley_tournament(7, 1));
  CHECK(r.method == "brute");
  CHECK_FALSE(r.time_limited);
  check_result(tsb::paley_tournament(7, 1), r);

  Digraph::Builder big(21);
  const Digraph g21 = big.take();
  CHECK_THROWS_AS(tsb::max_transitive_brute(g21), InputError);
}

TEST_CASE("branch and bound agrees with brute force on tournaments") {
  int cases = 0;
  for (unsigned seed = 0; seed < 40; ++seed) {
    for (int v : {1, 2, 3, 5, 8, 10, 12}) {
      const Digraph g = testutil::random_tournament(v, seed * 131u + v);
      const SearchResult slow = tsb::max_transitive_brute(g);
      const SearchResult fast = tsb::max_transitive_bb(g);
      CHECK(fast.max_size == slow.max_size);
      CHECK(fast.method == "branch_bound");
      check_result(g, fast);
      ++cases;
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("branch and bound agrees with brute force on sparse digraphs") {
  for (unsigned seed = 0; seed < 25; ++seed) {
    const int v = 4 + static_cast<int>(seed % 7);
    const Digraph g = testutil::random_digraph(v, 0.55, 900u + seed);
    const SearchResult slow = tsb::max_transitive_brute(g);
    const SearchResult fast = tsb::max_transitive_bb(g);
    CHECK(fast.max_size == slow.max_size);
    check_result(g, fast);
  }
}

TEST_CASE("branch and bound on paley tournaments") {
  CHECK(tsb::max_transitive_bb(tsb::paley_tournament(23, 1)).max_size == 5);
  CHECK(tsb::max_transitive_bb(tsb::paley_tournament(3, 3)).max_size == 5);
  const Digraph p31 = tsb::paley_tournament(31, 1);
  const SearchResult r31 = tsb::max_transitive_bb(p31);
  CHECK(r31.max_size == 7);
  check_result(p31, r31);
}

TEST_CASE("upper cutoff stops the search without changing the answer") {
  const Digraph g = tsb::paley_tournament(7, 1);
  const SearchResult capped = tsb::max_transitive_bb(g, 0.0, 3);
  CHECK(capped.max_size == 3);
  CHECK_FALSE(capped.time_limited);
  const SearchResult loose = tsb::max_transitive_bb(g, 0.0, 100);
  CHECK(loose.max_size == 3);
  // The proven cap lets the search quit early.
  CHECK(capped.nodes_explored <= loose.nodes_explored);
}

TEST_CASE("time limit marks the result as a lower bound") {
  const Digraph g = tsb::paley_tournament(103, 1);
  const SearchResult r = tsb::max_transitive_bb(g, 0.005, 0);
  CHECK(r.time_limited);
  CHECK(r.max_size >= 1);
  CHECK(tsb::verify_transitive(g, r.witness));
}

TEST_CASE("maximum never grows under vertex deletion") {
  for (unsigned seed = 0; seed < 6; ++seed) {
    const Digraph g = testutil::random_tournament(9, 300u + seed);
    const long long whole = tsb::max_transitive_bb(g).max_size;
    for (int x = 0; x < 9; ++x) {
      CHECK(tsb::max_transitive_bb(g.without_vertex(x)).max_size <= whole);
    }
  }
}

TEST_CASE("balance report on a regular tournament") {
  const Digraph g = tsb::paley_tournament(7, 1);
  const SearchResult r = tsb::max_transitive_brute(g);
  REQUIRE(r.max_size == 3);
  const tsb::BalanceReport rep = tsb::balance_check(g, r.witness);
  CHECK(rep.entries.size() == 4);
  for (const auto& e : rep.entries) {
    CHECK(e.dominating + e.dominated == 3);  // tournament: all pairs adjacent
    CHECK(e.dominating >= 0);
    CHECK(e.dominated >= 0);
  }
  // An odd chain cannot split evenly.
  CHECK_FALSE(rep.all_balanced);
}

TEST_CASE("balance entries reproduce the skew quadratic form") {
  for (unsigned seed = 0; seed < 10; ++seed) {
    const int v = 6 + static_cast<int>(seed % 5);
    const Digraph g = testutil::random_tournament(v, 500u + seed);
    const SearchResult r = tsb::max_transitive_bb(g);
    const tsb::BalanceReport rep = tsb::balance_check(g, r.witness);
    const long long s = r.max_size;
    double total = static_cast<double>(s) * (s * s - 1) / 3.0;
    for (const auto& e : rep.entries) {
      const double d = e.dominated - e.dominating;
      total += d * d;
    }
    const VertexSet set = VertexSet::from_members(v, r.witness);
    CHECK(tsb::quadratic_form_skew(g, set) == doctest::Approx(total));
  }
}

TEST_CASE("balance_check validates the witness") {
  const Digraph c3 = tsb::directed_cycle(3);
  CHECK_THROWS_WITH_AS(tsb::balance_check(c3, {0, 1, 2}),
                       "witness is not a transitive subtournament in "
                       "domination order",
                       InputError);
  CHECK_THROWS_AS(tsb::balance_check(c3, {0, 0}), InputError);
  CHECK_THROWS_AS(tsb::balance_check(c3, {5}), InputError);
}
