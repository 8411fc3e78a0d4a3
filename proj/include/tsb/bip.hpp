#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace tsb {

// Falling factorial P(x,k) = x(x-1)...(x-k+1); P(x,0) = 1.
mpq_class falling_factorial(const mpq_class& x, long long k);

// Binomial coefficient C(n,k) for n, k >= 0 (0 when k > n).
mpz_class binomial_exact(unsigned long n, unsigned long k);

// Input to the generic block intersection polynomial: intersection-count
// candidates m_0..m_s and design parameters lambda_0..lambda_t.
struct BipInput {
  long long s = 0;
  long long t = 0;
  std::vector<mpq_class> m;       // size s + 1
  std::vector<mpq_class> lambda;  // size t + 1

  void validate() const;  // throws InputError on length mismatch
};

// Evaluates
//   B(x) = sum_{j=0}^{t} C(t,j) P(-x, t-j)
//          (P(s,j) lambda_j - sum_{i=j}^{s} P(i,j) m_i)
// exactly in rational arithmetic.
mpq_class block_intersection_poly(const BipInput& input, const mpq_class& x);

// The quadratic 3*C(x,y) specialized to a doubly regular tournament on
// v = 4m-1 vertices and a candidate transitive subtournament of size y:
//   C(x,y) = x(x+1)(4m-1-y) - 2xy(2m-(y+1)/2) + y(y-1)(m-(y+1)/3).
// Multiplying by 3 clears the denominator, so all coefficients are
// integers; the leading coefficient is 3(4m-1-y) > 0 whenever y < 4m-1.
struct AdjPolynomial {
  long long m = 0;
  long long y = 0;
  mpz_class x2, x1, x0;  // 3*C(x,y) = x2*x^2 + x1*x + x0

  mpz_class eval(const mpz_class& x) const;
};

AdjPolynomial adjacency_poly(long long m, long long y);

// True iff 3*C(b,y) >= 0 for every integer b.  Decided exactly: the
// quadratic opens upward, so it suffices to evaluate at the one or two
// integers adjacent to the vertex -x1/(2*x2).  Requires 1 < y < 4m-1.
bool bip_feasible(long long m, long long y);

// Prefix-feasibility scan over y: the largest y with 1 < y < 4m-1 such
// that every size 2..y is feasible.  Feasibility is not known to be
// monotone in y, so any feasible y beyond the first failure is recorded
// in `violations` rather than assumed away.
struct BipScan {
  long long bound = 0;
  std::vector<long long> violations;  // feasible sizes past the first failure
};

BipScan bip_scan(long long m);
long long bip_bound(long long m);

// Closed-form case analysis of the adjacency-polynomial bound, driven by
// f = floor(sqrt(1+12m)) and epsilon = sqrt(1+12m) - f:
//   case 1: always, bound f-1;
//   case 2: epsilon = 0, bound f-2;
//   case 3: epsilon != 0 and f-1 odd, bound f-2;
//   case 4: epsilon != 0 and (2f+1)^2 > 1+48m (strict), bound f-2.
// All tests are integer-exact; equality in case 4 means not applicable.
// Reported by the CLI under the method name "thm54".
struct ClosedCaseBound {
  std::array<bool, 4> case_applicable{};  // cases 1..4
  long long bound = 0;
  bool epsilon_is_zero = false;
  long long f = 0;
};

ClosedCaseBound closed_case_bound(long long m);

}  // namespace tsb
