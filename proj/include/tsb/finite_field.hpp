#pragma once

#include <cstdint>
#include <vector>

namespace tsb {

// GF(p^deg) with a fixed canonical representation. Elements are the indices
// 0..q-1 read as base-p digit vectors, least significant digit first, digit i
// being the coefficient of x^i. The modulus is the lexicographically
// smallest monic irreducible polynomial of the requested degree, comparing
// coefficient tuples from the constant term up. For deg == 1 the modulus is
// x, so elements are just residues mod p.
class FiniteField {
 public:
  // Throws InputError if p is not prime, deg < 1, or p^deg overflows.
  FiniteField(long long p, int deg);

  long long p() const { return p_; }
  int degree() const { return deg_; }
  long long q() const { return q_; }

  // Coefficients c_0..c_deg of the modulus, c_deg == 1.
  const std::vector<long long>& modulus() const { return modulus_; }

  long long add(long long a, long long b) const;
  long long sub(long long a, long long b) const;
  long long neg(long long a) const;
  long long mul(long long a, long long b) const;
  long long pow(long long a, long long e) const;
  long long inv(long long a) const;  // InputError on a == 0

 private:
  std::vector<long long> decode(long long a) const;
  long long encode(const std::vector<long long>& coeffs) const;

  long long p_ = 0;
  int deg_ = 0;
  long long q_ = 0;
  std::vector<long long> modulus_;
};

bool is_prime(long long n);

// p^deg with overflow detection; InputError when it does not fit.
long long checked_pow(long long p, int deg);

}  // namespace tsb
