#pragma once

#include <optional>
#include <utility>

#include "tsb/digraph.hpp"

namespace tsb {

// Paley tournament on GF(q), q = p^deg = 3 (mod 4): vertices are the field
// elements in canonical order, with an edge x -> y iff x - y is a nonzero
// square. The result is always a doubly regular tournament; construction
// verifies this via classify.
Digraph paley_tournament(long long p, int deg);

// Writes q as p^deg for prime p, or nullopt when q is not a prime power.
std::optional<std::pair<long long, int>> prime_power_decompose(long long q);

}  // namespace tsb
