#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace bisetkit {

/**
 * Element of the cyclotomic field Q(z_e), stored in the power basis
 * 1, z, ..., z^(phi(e)-1) modulo the e-th cyclotomic polynomial.
 * Operands of different levels are embedded into the lcm of the levels.
 */
class Cyclotomic
{
public:
  Cyclotomic() = default;
  Cyclotomic(long v);
  Cyclotomic(Rational const &q);

  // z_order^power
  static Cyclotomic root_of_unity(int order, long power);
  static Cyclotomic from_coefficients(int level, std::vector<Rational> coeffs);

  int level() const { return _level; }
  std::vector<Rational> const &coefficients() const { return _coeffs; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;

  Cyclotomic at_level(int e) const;
  // smallest level on which the value is defined
  Cyclotomic reduced() const;

  Cyclotomic conj() const;
  Cyclotomic inverse() const;

  Cyclotomic &operator+=(Cyclotomic const &o);
  Cyclotomic &operator-=(Cyclotomic const &o);
  Cyclotomic &operator*=(Cyclotomic const &o);
  Cyclotomic &operator/=(Cyclotomic const &o);

  friend Cyclotomic operator+(Cyclotomic a, Cyclotomic const &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, Cyclotomic const &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, Cyclotomic const &b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, Cyclotomic const &b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(Cyclotomic const &a, Cyclotomic const &b);
  friend bool operator!=(Cyclotomic const &a, Cyclotomic const &b) { return !(a == b); }

  // polynomial in the named root, highest power first, e.g. "z8^2 - z8"
  std::string to_string() const;

private:
  void trim();

  int _level = 1;
  std::vector<Rational> _coeffs; // empty means zero
};

inline bool is_zero(Cyclotomic const &c) { return c.is_zero(); }

// coefficients of the e-th cyclotomic polynomial, constant term first
std::vector<long> cyclotomic_polynomial(int e);

} // namespace bisetkit
