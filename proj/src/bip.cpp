#include "tsb/bip.hpp"

#include <string>

#include "tsb/error.hpp"
#include "tsb/linalg.hpp"

namespace tsb {

mpq_class falling_factorial(const mpq_class& x, long long k) {
  if (k < 0) {
    throw InputError("falling factorial needs k >= 0, got " +
                     std::to_string(k));
  }
  mpq_class result = 1;
  mpq_class factor = x;
  for (long long i = 0; i < k; ++i) {
    result *= factor;
    factor -= 1;
  }
  return result;
}

mpz_class binomial_exact(unsigned long n, unsigned long k) {
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

void BipInput::validate() const {
  if (s < 0 || t < 0 || t > s) {
    throw InputError("block intersection polynomial needs 0 <= t <= s, got s=" +
                     std::to_string(s) + " t=" + std::to_string(t));
  }
  if (m.size() != static_cast<std::size_t>(s + 1)) {
    throw InputError("expected " + std::to_string(s + 1) +
                     " intersection counts m_0..m_s, got " +
                     std::to_string(m.size()));
  }
  if (lambda.size() != static_cast<std::size_t>(t + 1)) {
    throw InputError("expected " + std::to_string(t + 1) +
                     " coefficients lambda_0..lambda_t, got " +
                     std::to_string(lambda.size()));
  }
}

mpq_class block_intersection_poly(const BipInput& input, const mpq_class& x) {
  input.validate();
  mpq_class total = 0;
  for (long long j = 0; j <= input.t; ++j) {
    mpq_class inner =
        falling_factorial(mpq_class(static_cast<long>(input.s)), j) *
        input.lambda[static_cast<std::size_t>(j)];
    for (long long i = j; i <= input.s; ++i) {
      inner -= falling_factorial(mpq_class(static_cast<long>(i)), j) *
               input.m[static_cast<std::size_t>(i)];
    }
    total += mpq_class(binomial_exact(static_cast<unsigned long>(input.t),
                                      static_cast<unsigned long>(j))) *
             falling_factorial(-x, input.t - j) * inner;
  }
  return total;
}

mpz_class AdjPolynomial::eval(const mpz_class& x) const {
  return (x2 * x + x1) * x + x0;
}

AdjPolynomial adjacency_poly(long long m, long long y) {
  if (m < 1) {
    throw InputError("adjacency polynomial needs m >= 1, got " +
                     std::to_string(m));
  }
  if (y < 0) {
    throw InputError("adjacency polynomial needs y >= 0, got " +
                     std::to_string(y));
  }
  AdjPolynomial p;
  p.m = m;
  p.y = y;
  // Coefficients in exact integers so that even extreme inputs cannot
  // overflow.
  const mpz_class mm = static_cast<long>(m);
  const mpz_class yy = static_cast<long>(y);
  p.x2 = 3 * (4 * mm - 1 - yy);
  p.x1 = p.x2 - 12 * mm * yy + 3 * yy * yy + 3 * yy;
  p.x0 = yy * (yy - 1) * (3 * mm - yy - 1);
  return p;
}

bool bip_feasible(long long m, long long y) {
  if (m < 1 || y <= 1 || y >= 4 * m - 1) {
    throw InputError("feasibility test needs 1 < y < 4m-1, got m=" +
                     std::to_string(m) + " y=" + std::to_string(y));
  }
  const AdjPolynomial p = adjacency_poly(m, y);
  // Upward parabola: its minimum over the integers is at one of the two
  // integers flanking the vertex -x1/(2*x2).
  const mpz_class num = -p.x1;
  const mpz_class den = 2 * p.x2;
  mpz_class b;
  mpz_fdiv_q(b.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return sgn(p.eval(b)) >= 0 && sgn(p.eval(b + 1)) >= 0;
}

BipScan bip_scan(long long m) {
  if (m < 1) {
    throw InputError("scan needs m >= 1, got " + std::to_string(m));
  }
  BipScan out;
  out.bound = 1;
  bool failed = false;
  const long long v = 4 * m - 1;
  for (long long y = 2; y < v; ++y) {
    const bool ok = bip_feasible(m, y);
    if (!failed) {
      if (ok) {
        out.bound = y;
      } else {
        failed = true;
      }
    } else if (ok) {
      out.violations.push_back(y);
    }
  }
  return out;
}

long long bip_bound(long long m) { return bip_scan(m).bound; }

ClosedCaseBound closed_case_bound(long long m) {
  if (m < 1) {
    throw InputError("closed-form bound needs m >= 1, got " +
                     std::to_string(m));
  }
  ClosedCaseBound out;
  const mpz_class n = 12 * mpz_class(static_cast<long>(m)) + 1;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  out.f = mpz_get_si(root.get_mpz_t());
  out.epsilon_is_zero = root * root == n;

  out.case_applicable[0] = true;
  out.case_applicable[1] = out.epsilon_is_zero;
  out.case_applicable[2] = !out.epsilon_is_zero && (out.f - 1) % 2 != 0;
  out.case_applicable[3] =
      !out.epsilon_is_zero && (2 * root + 1) * (2 * root + 1) > 4 * n - 3;

  out.bound = out.f - 1;
  if (out.case_applicable[1] || out.case_applicable[2] ||
      out.case_applicable[3]) {
    out.bound = out.f - 2;
  }
  return out;
}

}  // namespace tsb
