#include <cstdlib>
#include <numeric>

#include "bisetkit/errors.hpp"
#include "bisetkit/rational.hpp"

namespace bisetkit {

std::string to_string(Rational const &q)
{
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string const &s)
{
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw ParseError("not a rational number: '" + s + "'");
  if (q.get_den() == 0)
    throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::vector<std::string> to_strings(std::vector<Rational> const &v)
{
  std::vector<std::string> res;
  res.reserve(v.size());
  for (auto const &q : v)
    res.push_back(to_string(q));
  return res;
}

long gcd(long a, long b)
{ return std::gcd(a, b); }

long lcm(long a, long b)
{ return std::lcm(a, b); }

int euler_phi(int n)
{
  int res = n;
  for (int p : prime_factors(n))
    res = res / p * (p - 1);
  return res;
}

bool is_prime(int n)
{
  if (n < 2)
    return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<int> prime_factors(int n)
{
  std::vector<int> res;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    res.push_back(d);
    while (n % d == 0)
      n /= d;
  }
  if (n > 1)
    res.push_back(n);
  return res;
}

std::vector<int> divisors(int n)
{
  std::vector<int> res;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0)
      res.push_back(d);
  return res;
}

int p_part(int n, int p)
{
  int res = 1;
  while (p > 1 && n % p == 0) {
    n /= p;
    res *= p;
  }
  return res;
}

int p_prime_part(int n, int p)
{ return n / p_part(n, p); }

} // namespace bisetkit
