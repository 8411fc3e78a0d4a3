#include "tsb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsb/error.hpp"

namespace tsb {

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * n) {
    throw InputError("matrix buffer does not match the requested order");
  }
  if (n == 0) return {};

  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  double fro = 0.0;
  for (double x : a) fro += x * x;
  fro = std::sqrt(fro);
  const double stop = 1e-14 * std::max(1.0, fro);

  // Cyclic Jacobi: sweep all (p, q) pairs in a fixed order and rotate the
  // off-diagonal entry to zero.  Deterministic, quadratically convergent
  // once the off-diagonal mass is small.
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    }
    if (std::sqrt(off) <= stop) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = at(i, i);
      std::sort(eig.begin(), eig.end(), std::greater<double>());
      return eig;
    }

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e154) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = std::copysign(1.0, theta) /
              (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(p, k) = at(k, p);
          at(k, q) = s * akp + c * akq;
          at(q, k) = at(k, q);
        }
      }
    }
  }
  throw NumericError("eigensolver did not converge within " +
                     std::to_string(kMaxSweeps) + " sweeps");
}

int integer_rank(std::vector<mpz_class> a, int rows, int cols) {
  if (rows < 0 || cols < 0 ||
      a.size() != static_cast<std::size_t>(rows) * cols) {
    throw InputError("matrix buffer does not match the requested shape");
  }
  auto at = [&](int i, int j) -> mpz_class& {
    return a[static_cast<std::size_t>(i) * cols + j];
  };

  // Fraction-free (Bareiss) elimination: every intermediate entry is a
  // minor of the input, so the division by the previous pivot is exact.
  int rank = 0;
  mpz_class prev = 1;
  mpz_class tmp;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        tmp = at(rank, col) * at(i, j) - at(i, col) * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

long long integer_sqrt(long long n) {
  if (n < 0) throw InputError("integer square root of a negative number");
  mpz_class r = sqrt(mpz_class(static_cast<long>(n)));
  return static_cast<long long>(r.get_si());
}

}  // namespace tsb
