#include "tsb/finite_field.hpp"

#include <limits>
#include <string>

#include "tsb/error.hpp"

namespace tsb {
namespace {

using u128 = unsigned __int128;

long long mulmod(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<u128>(a) * static_cast<u128>(b) %
                                static_cast<u128>(m));
}

long long powmod(long long a, long long e, long long m) {
  long long r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Evaluates a polynomial (coefficients constant-term first) at r mod p.
long long eval_mod(const std::vector<long long>& coeffs, long long r,
                   long long p) {
  long long acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = (mulmod(acc, r, p) + coeffs[i]) % p;
  }
  return acc;
}

// True when the monic divisor (coefficients d_0..d_{k-1}, leading 1)
// divides the monic candidate exactly over GF(p).
bool divides(const std::vector<long long>& cand,
             const std::vector<long long>& div, int k, long long p) {
  std::vector<long long> rem = cand;
  for (int i = static_cast<int>(rem.size()) - 1; i >= k; --i) {
    const long long c = rem[i];
    if (c == 0) continue;
    rem[i] = 0;
    for (int j = 0; j < k; ++j) {
      rem[i - k + j] = (rem[i - k + j] + mulmod(p - c, div[j], p)) % p;
    }
  }
  for (int j = 0; j < k; ++j) {
    if (rem[j] != 0) return false;
  }
  return true;
}

// Irreducibility over GF(p) by the definitional route: no roots, and no
// monic factor of degree 2..deg/2 divides (trial division).
bool irreducible(const std::vector<long long>& cand, int deg, long long p) {
  for (long long r = 0; r < p; ++r) {
    if (eval_mod(cand, r, p) == 0) return false;
  }
  for (int k = 2; 2 * k <= deg; ++k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    std::vector<long long> div(k + 1, 0);
    div[k] = 1;
    for (long long t = 0; t < count; ++t) {
      long long r = t;
      for (int i = 0; i < k; ++i) {
        div[i] = r % p;
        r /= p;
      }
      if (divides(cand, div, k, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin witness set for 64-bit integers.
  for (long long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    long long x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

long long checked_pow(long long p, int deg) {
  long long r = 1;
  for (int i = 0; i < deg; ++i) {
    if (r > std::numeric_limits<long long>::max() / p) {
      throw InputError("p^deg overflows the native integer width");
    }
    r *= p;
  }
  return r;
}

FiniteField::FiniteField(long long p, int deg) : p_(p), deg_(deg) {
  if (p < 2 || !is_prime(p)) {
    throw InputError("not prime: " + std::to_string(p));
  }
  if (deg < 1) throw InputError("extension degree must be >= 1");
  q_ = checked_pow(p, deg);

  if (deg == 1) {
    modulus_ = {0, 1};  // x
    return;
  }
  // Enumerate monic candidates x^deg + c_{deg-1} x^{deg-1} + ... + c_0 in
  // lexicographic order of (c_0, ..., c_{deg-1}); the first irreducible
  // one is the canonical modulus.
  std::vector<long long> cand(deg + 1, 0);
  cand[deg] = 1;
  for (long long t = 0; t < q_; ++t) {
    long long r = t;
    for (int i = deg - 1; i >= 0; --i) {
      cand[i] = r % p;
      r /= p;
    }
    if (irreducible(cand, deg, p)) {
      modulus_ = cand;
      return;
    }
  }
  // Irreducible polynomials of every degree exist over every GF(p).
  throw NumericError("no irreducible modulus found (impossible)");
}

std::vector<long long> FiniteField::decode(long long a) const {
  if (a < 0 || a >= q_) {
    throw InputError("field element " + std::to_string(a) +
                     " out of range for q = " + std::to_string(q_));
  }
  std::vector<long long> d(deg_);
  for (int i = 0; i < deg_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

long long FiniteField::encode(const std::vector<long long>& coeffs) const {
  long long a = 0;
  for (int i = deg_ - 1; i >= 0; --i) a = a * p_ + coeffs[i];
  return a;
}

long long FiniteField::add(long long a, long long b) const {
  auto x = decode(a), y = decode(b);
  for (int i = 0; i < deg_; ++i) x[i] = (x[i] + y[i]) % p_;
  return encode(x);
}

long long FiniteField::sub(long long a, long long b) const {
  auto x = decode(a), y = decode(b);
  for (int i = 0; i < deg_; ++i) x[i] = (x[i] - y[i] + p_) % p_;
  return encode(x);
}

long long FiniteField::neg(long long a) const {
  auto x = decode(a);
  for (int i = 0; i < deg_; ++i) x[i] = (p_ - x[i]) % p_;
  return encode(x);
}

long long FiniteField::mul(long long a, long long b) const {
  auto x = decode(a), y = decode(b);
  std::vector<long long> prod(2 * deg_ - 1, 0);
  for (int i = 0; i < deg_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < deg_; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(x[i], y[j], p_)) % p_;
    }
  }
  // Reduce modulo the monic modulus, top coefficient down.
  for (int i = 2 * deg_ - 2; i >= deg_; --i) {
    const long long c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < deg_; ++j) {
      prod[i - deg_ + j] =
          (prod[i - deg_ + j] + mulmod(p_ - c, modulus_[j], p_)) % p_;
    }
  }
  prod.resize(deg_);
  return encode(prod);
}

long long FiniteField::pow(long long a, long long e) const {
  if (e < 0) throw InputError("negative exponent");
  decode(a);  // range check
  long long r = 1;
  long long base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

long long FiniteField::inv(long long a) const {
  if (a == 0) throw InputError("zero has no inverse");
  // The multiplicative group has order q-1, so a^(q-2) inverts a.
  return pow(a, q_ - 2);
}

}  // namespace tsb
