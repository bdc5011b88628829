#ifndef HOPFIND_NUMUTIL_HPP
#define HOPFIND_NUMUTIL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "hopfind/errors.hpp"

namespace hopfind {

using Rat = mpq_class;
using Int = mpz_class;

inline long igcd(long a, long b) { return std::gcd(a, b); }
inline long ilcm(long a, long b) { return std::lcm(a, b); }

inline long imod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// x^e mod m, m > 0
inline long modpow(long x, long e, long m) {
  long r = 1 % m;
  x = imod(x, m);
  while (e > 0) {
    if (e & 1) r = static_cast<long>((__int128)r * x % m);
    x = static_cast<long>((__int128)x * x % m);
    e >>= 1;
  }
  return r;
}

inline long modinv(long a, long m) {
  long t = 0, nt = 1, r = m, nr = imod(a, m);
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw domain_error("modinv: argument not invertible");
  return imod(t, m);
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> lo, hi;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
  return lo;
}

inline std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

inline bool is_squarefree(long n) {
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

// "m is large compared to d": for every prime p dividing gcd(m,d), the full
// p-multiplicity of d divides m.
inline bool is_large_compared_to(long m, long d) {
  for (long p : prime_factors(igcd(m, d))) {
    long pk = 1;
    long dd = d;
    while (dd % p == 0) {
      dd /= p;
      pk *= p;
    }
    if (m % pk != 0) return false;
  }
  return true;
}

inline Int int_pow(Int base, long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

} // namespace hopfind

#endif
