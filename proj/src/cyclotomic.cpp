#include <map>
#include <mutex>
#include <sstream>

#include "bisetkit/cyclotomic.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/linalg.hpp"

namespace bisetkit {

namespace {

std::vector<long> poly_div_exact(std::vector<long> num, std::vector<long> const &den)
{
  // den is monic
  std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);

  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    quot[i - dn] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= dn; ++j)
      num[i - dn + j] -= c * den[j];
  }

  return quot;
}

// x^e = 1 first, then reduction modulo the cyclotomic polynomial
std::vector<Rational> reduce_mod(std::vector<Rational> p, int e)
{
  if (p.size() > static_cast<std::size_t>(e)) {
    for (std::size_t i = e; i < p.size(); ++i)
      if (!is_zero(p[i]))
        p[i % e] += p[i];
    p.resize(e);
  }

  auto const &phi = cyclotomic_polynomial(e);
  std::size_t d = phi.size() - 1;

  for (std::size_t i = p.size(); i-- > d;) {
    if (is_zero(p[i]))
      continue;
    Rational c = p[i];
    for (std::size_t j = 0; j <= d; ++j)
      if (phi[j] != 0)
        p[i - d + j] -= c * phi[j];
  }

  if (p.size() > d)
    p.resize(d);
  return p;
}

} // anonymous namespace

std::vector<long> cyclotomic_polynomial(int e)
{
  static std::mutex mtx;
  static std::map<int, std::vector<long>> cache;

  if (e < 1)
    throw DomainError("cyclotomic level must be positive");

  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(e);
    if (it != cache.end())
      return it->second;
  }

  std::vector<long> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (int d : divisors(e))
    if (d < e)
      num = poly_div_exact(num, cyclotomic_polynomial(d));

  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(e, num);
  return num;
}

Cyclotomic::Cyclotomic(long v)
{
  if (v != 0)
    _coeffs.emplace_back(v);
}

Cyclotomic::Cyclotomic(Rational const &q)
{
  if (!bisetkit::is_zero(q))
    _coeffs.push_back(q);
}

Cyclotomic Cyclotomic::root_of_unity(int order, long power)
{
  if (order < 1)
    throw DomainError("root of unity of non-positive order");

  long k = ((power % order) + order) % order;
  std::vector<Rational> p(k + 1, Rational(0));
  p[k] = 1;

  return from_coefficients(order, std::move(p));
}

Cyclotomic Cyclotomic::from_coefficients(int level, std::vector<Rational> coeffs)
{
  Cyclotomic c;
  c._level = level;
  c._coeffs = reduce_mod(std::move(coeffs), level);
  c.trim();
  return c;
}

void Cyclotomic::trim()
{
  while (!_coeffs.empty() && bisetkit::is_zero(_coeffs.back()))
    _coeffs.pop_back();
}

bool Cyclotomic::is_zero() const
{ return _coeffs.empty(); }

bool Cyclotomic::is_rational() const
{ return _coeffs.size() <= 1; }

Rational Cyclotomic::rational_value() const
{
  if (!is_rational())
    throw DomainError("cyclotomic number is not rational: " + to_string());
  return _coeffs.empty() ? Rational(0) : _coeffs[0];
}

Cyclotomic Cyclotomic::at_level(int e) const
{
  if (e % _level != 0)
    throw DomainError("cannot embed level " + std::to_string(_level) +
                      " into level " + std::to_string(e));
  if (e == _level)
    return *this;

  Cyclotomic res;
  res._level = e;
  if (is_zero())
    return res;

  int step = e / _level;
  std::vector<Rational> p((_coeffs.size() - 1) * step + 1, Rational(0));
  for (std::size_t j = 0; j < _coeffs.size(); ++j)
    p[j * step] = _coeffs[j];

  res._coeffs = reduce_mod(std::move(p), e);
  res.trim();
  return res;
}

Cyclotomic Cyclotomic::reduced() const
{
  if (is_rational())
    return is_zero() ? Cyclotomic() : Cyclotomic(_coeffs[0]);

  std::size_t full = cyclotomic_polynomial(_level).size() - 1;

  for (int d : divisors(_level)) {
    if (d == 1 || d == _level)
      continue;

    std::size_t deg = cyclotomic_polynomial(d).size() - 1;
    Matrix<Rational> a(full, Vector<Rational>(deg, Rational(0)));
    for (std::size_t j = 0; j < deg; ++j) {
      auto img = root_of_unity(d, j).at_level(_level);
      for (std::size_t i = 0; i < img._coeffs.size(); ++i)
        a[i][j] = img._coeffs[i];
    }

    Vector<Rational> b(full, Rational(0));
    std::copy(_coeffs.begin(), _coeffs.end(), b.begin());

    if (auto x = solve(a, b, deg))
      return from_coefficients(d, *x);
  }

  return *this;
}

Cyclotomic Cyclotomic::conj() const
{
  if (is_zero() || _level <= 2)
    return *this;

  std::vector<Rational> p(_level, Rational(0));
  for (std::size_t j = 0; j < _coeffs.size(); ++j)
    p[(_level - static_cast<int>(j)) % _level] += _coeffs[j];

  return from_coefficients(_level, std::move(p));
}

Cyclotomic Cyclotomic::inverse() const
{
  if (is_zero())
    throw DomainError("division by zero in cyclotomic field");
  if (is_rational())
    return Cyclotomic(Rational(1) / _coeffs[0]);

  std::size_t d = cyclotomic_polynomial(_level).size() - 1;

  Matrix<Rational> a(d, Vector<Rational>(d, Rational(0)));
  for (std::size_t j = 0; j < d; ++j) {
    auto col = *this * root_of_unity(_level, j);
    for (std::size_t i = 0; i < col._coeffs.size(); ++i)
      a[i][j] = col._coeffs[i];
  }

  Vector<Rational> b(d, Rational(0));
  b[0] = 1;

  auto x = solve(a, b, d);
  if (!x)
    throw ConsistencyError("singular multiplication matrix in cyclotomic field");

  return from_coefficients(_level, *x);
}

Cyclotomic &Cyclotomic::operator+=(Cyclotomic const &o)
{
  if (o.is_zero())
    return *this;

  if (is_zero() && o._level % _level == 0) {
    *this = o;
    return *this;
  }

  if (o.is_rational() && !o.is_zero()) {
    if (_coeffs.empty())
      _coeffs.emplace_back(0);
    _coeffs[0] += o._coeffs[0];
    trim();
    return *this;
  }

  int e = static_cast<int>(lcm(_level, o._level));
  if (e != _level)
    *this = at_level(e);
  Cyclotomic other = o.at_level(e);

  if (_coeffs.size() < other._coeffs.size())
    _coeffs.resize(other._coeffs.size(), Rational(0));
  for (std::size_t i = 0; i < other._coeffs.size(); ++i)
    _coeffs[i] += other._coeffs[i];

  trim();
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(Cyclotomic const &o)
{ return *this += -o; }

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic res = *this;
  for (auto &c : res._coeffs)
    c = -c;
  return res;
}

Cyclotomic &Cyclotomic::operator*=(Cyclotomic const &o)
{
  if (is_zero())
    return *this;

  if (o.is_zero()) {
    _coeffs.clear();
    return *this;
  }

  if (o.is_rational()) {
    for (auto &c : _coeffs)
      c *= o._coeffs[0];
    return *this;
  }

  if (is_rational()) {
    Rational q = _coeffs[0];
    *this = o;
    for (auto &c : _coeffs)
      c *= q;
    return *this;
  }

  int e = static_cast<int>(lcm(_level, o._level));
  Cyclotomic a = at_level(e);
  Cyclotomic b = o.at_level(e);

  std::vector<Rational> p(a._coeffs.size() + b._coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a._coeffs.size(); ++i) {
    if (bisetkit::is_zero(a._coeffs[i]))
      continue;
    for (std::size_t j = 0; j < b._coeffs.size(); ++j)
      if (!bisetkit::is_zero(b._coeffs[j]))
        p[i + j] += a._coeffs[i] * b._coeffs[j];
  }

  *this = from_coefficients(e, std::move(p));
  return *this;
}

Cyclotomic &Cyclotomic::operator/=(Cyclotomic const &o)
{ return *this *= o.inverse(); }

bool operator==(Cyclotomic const &a, Cyclotomic const &b)
{
  if (a.is_rational() && b.is_rational())
    return a._coeffs == b._coeffs;

  int e = static_cast<int>(lcm(a._level, b._level));
  return a.at_level(e)._coeffs == b.at_level(e)._coeffs;
}

std::string Cyclotomic::to_string() const
{
  Cyclotomic c = reduced();
  if (c.is_rational())
    return bisetkit::to_string(c.rational_value());

  std::string root = "z" + std::to_string(c._level);
  std::ostringstream os;
  bool first = true;

  for (std::size_t j = c._coeffs.size(); j-- > 0;) {
    Rational q = c._coeffs[j];
    if (bisetkit::is_zero(q))
      continue;

    bool neg = sgn(q) < 0;
    Rational mag = neg ? Rational(-q) : q;

    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;

    std::string mono = j == 0 ? "" : (j == 1 ? root : root + "^" + std::to_string(j));
    if (mono.empty())
      os << bisetkit::to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << bisetkit::to_string(mag) << "*" << mono;
  }

  return os.str();
}

} // namespace bisetkit
