#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace tsb {

// Dense symmetric matrix stored row-major; only the values are needed (no
// eigenvectors), so callers pass a full n*n buffer and get the eigenvalues
// back sorted in descending order.
//
// The solver is a deterministic cyclic Jacobi iteration: identical input
// produces identical output on every run.  Throws NumericError if the
// off-diagonal mass fails to vanish within the sweep budget.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

// Exact rank over the integers via fraction-free (Bareiss) elimination.
// The matrix is consumed.
int integer_rank(std::vector<mpz_class> a, int rows, int cols);

// Best integer square root: largest r with r*r <= n.  Requires n >= 0.
long long integer_sqrt(long long n);

}  // namespace tsb
