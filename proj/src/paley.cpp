#include "tsb/paley.hpp"

#include <string>
#include <vector>

#include "tsb/error.hpp"
#include "tsb/finite_field.hpp"

namespace tsb {

Digraph paley_tournament(long long p, int deg) {
  const FiniteField f(p, deg);
  const long long q = f.q();
  if (q % 4 != 3) {
    throw InputError("paley tournament needs q = 3 (mod 4), got q = " +
                     std::to_string(q) +
                     " (otherwise -1 is a square and the edge relation is "
                     "not an orientation)");
  }
  if (q > 10000) {
    throw InputError("paley tournament limited to q <= 10000 (got q = " +
                     std::to_string(q) + ")");
  }

  // C_0 = nonzero squares; since q = 3 (mod 4), exactly one of x - y and
  // y - x lies in C_0 for each pair, so the relation is a tournament.
  std::vector<char> square(static_cast<std::size_t>(q), 0);
  for (long long z = 1; z < q; ++z) square[f.mul(z, z)] = 1;

  const int v = static_cast<int>(q);
  Digraph::Builder b(v);
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) {
      if (x != y && square[f.sub(x, y)]) b.add_edge(x, y);
    }
  }
  Digraph g = b.take();

  if (!classify(g).is_doubly_regular) {
    throw NumericError(
        "paley construction failed the doubly-regular verification");
  }
  return g;
}

std::optional<std::pair<long long, int>> prime_power_decompose(long long q) {
  if (q < 2) return std::nullopt;
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(q, 1);  // q itself is prime
  int deg = 0;
  long long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++deg;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, deg);
}

}  // namespace tsb
