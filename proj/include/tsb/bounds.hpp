#pragma once

#include <string>
#include <vector>

#include "tsb/digraph.hpp"
#include "tsb/spectral.hpp"

namespace tsb {

// One upper bound on the size of a transitive subtournament.
//
// raw_value is the bound before flooring (NaN when the method does not
// apply or is inherently integral); integer_bound is the largest integer
// satisfying the method's inequality.  `exact` is set only when the raw
// bound provably equals integer_bound, certified in integer arithmetic —
// floating-point near-integers never count as exact.
struct BoundReport {
  std::string method;
  double raw_value = 0.0;
  long long integer_bound = 0;
  bool applicable = true;
  bool exact = false;
  std::string notes;
};

// Floating bounds are floored with this guard: floor(x + kFloorGuard).
inline constexpr double kFloorGuard = 1e-9;

// pi / (2 arccot(theta_max)): the closed-form value of the first
// interlacing constraint (the column printed by the table1 command with
// theta_max = sqrt(v)).
double interlacing_ratio(double theta_max);

// Largest s <= v such that cot((2i-1)pi/(2s)) <= theta_i + 1e-9 for all
// i = 1..floor(s/2), where theta_1 >= ... >= theta_v is the expanded
// spectrum.  Resolved as a feasibility search per s, descending from v,
// which avoids arccot branch ambiguity.
BoundReport interlacing_bound(const SeidelSpectrum& spec);

// With alpha = max main eigenvalue and gamma = max non-main eigenvalue:
// when alpha <= gamma,
//   raw = (3a^2 - 3g^2 + sqrt(4v^2(1+3g^2) + 9(g^2-a^2)^2)) / (2v).
// Not applicable when no eigenvalue is non-main or alpha > gamma.
BoundReport hoffman_general(const SeidelSpectrum& spec);

// Regular-digraph specialization driven by the spectral radius alone:
//   raw = (-3t^2 + sqrt(9t^4 + 4v^2 + 12t^2v^2)) / (2v).
// The caller is responsible for checking regularity via classify().
BoundReport hoffman_regular(double theta_max, long long v);

// Doubly-regular-tournament bound floor((-3 + sqrt(13 + 12v))/2) computed
// in pure integer arithmetic; `exact` is set when 13 + 12v is a perfect
// square, in which case the bound is hit exactly.  Requires v == 3 (mod 4).
BoundReport drt_bound_exact(long long v);

// For a regular tournament, a transitive subtournament meeting an exactly
// attained bound must have even size: when the report carries an exact odd
// integer bound, decrement it by one and note the refinement.
BoundReport parity_refine(const BoundReport& report,
                          bool is_regular_tournament);

// Method filter used by the CLI (--method).
struct MethodSet {
  bool interlacing = false;
  bool hoffman = false;
  bool drt = false;
  bool bip = false;
  bool thm54 = false;

  static MethodSet all();
  // Accepts one of: interlacing, hoffman, drt, bip, thm54, all.
  static MethodSet parse(const std::string& name);
};

struct BestBound {
  std::vector<BoundReport> reports;
  long long best = 0;  // minimum applicable integer bound, clamped to v
};

// Runs every requested method that applies to g: interlacing and the
// Hoffman-type bounds from the computed spectrum, the regular
// specialization when g is regular, and the exact integer bounds (with
// parity refinement) plus the intersection-polynomial bounds when g is a
// doubly regular tournament.  Inapplicable methods are reported with
// applicable = false, never as errors.
BestBound best_bound(const Digraph& g, const MethodSet& methods);
BestBound best_bound(const Digraph& g);

// The same composition for a hypothetical doubly regular tournament on v
// vertices, computable from v alone (its spectrum is determined); used for
// the upper-bound row of the table2 command.  Requires v == 3 (mod 4).
BestBound drt_best_bound(long long v);

}  // namespace tsb
