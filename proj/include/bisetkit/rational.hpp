#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bisetkit {

using Integer = mpz_class;
using Rational = mpq_class;

// canonical n/d
inline Rational frac(long n, long d)
{
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/** "num/den", or "num" when the denominator is 1. */
std::string to_string(Rational const &q);
Rational parse_rational(std::string const &s);

inline bool is_zero(Rational const &q) { return sgn(q) == 0; }

std::vector<std::string> to_strings(std::vector<Rational> const &v);

long gcd(long a, long b);
long lcm(long a, long b);
int euler_phi(int n);
bool is_prime(int n);
std::vector<int> prime_factors(int n);
std::vector<int> divisors(int n);

// largest divisor of n that is a power of p, and the complementary part
int p_part(int n, int p);
int p_prime_part(int n, int p);

} // namespace bisetkit
