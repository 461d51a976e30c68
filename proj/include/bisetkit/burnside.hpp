#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "class_function.hpp"
#include "group.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace bisetkit {

/** Element of the rational Burnside algebra, in the basis of transitive sets [G/K]. */
struct BurnsideElt
{
  GroupPtr group;
  std::vector<Rational> coeffs;   // indexed by subgroup class

  static BurnsideElt zero(GroupPtr const &g);
  static BurnsideElt transitive(GroupPtr const &g, int subgroup_class);
  static BurnsideElt identity(GroupPtr const &g);

  BurnsideElt &operator+=(BurnsideElt const &o);
  BurnsideElt operator+(BurnsideElt const &o) const;
  BurnsideElt operator-(BurnsideElt const &o) const;
  BurnsideElt operator*(Rational const &q) const;
  BurnsideElt operator*(BurnsideElt const &o) const;
  bool operator==(BurnsideElt const &o) const;
  bool operator!=(BurnsideElt const &o) const { return !(*this == o); }
  bool is_zero() const;

  bool in_pprime_span(int p) const;
};

using MarkVector = std::vector<Rational>;

// |(G/K)^H| for class representatives
long mark(GroupPtr const &g, int k_class, int h_class);
// rows K, columns H
Matrix<Rational> const &table_of_marks(GroupPtr const &g);

MarkVector marks_of(BurnsideElt const &x);
BurnsideElt from_marks(GroupPtr const &g, MarkVector const &v);

// double-coset formula, and an independent orbit count on G/K x G/L
BurnsideElt product(BurnsideElt const &x, BurnsideElt const &y);
BurnsideElt product_by_orbits(GroupPtr const &g, int k_class, int l_class);

BurnsideElt idempotent(GroupPtr const &g, int h_class);
BurnsideElt idempotent_moebius(GroupPtr const &g, int h_class);
BurnsideElt pprime_idempotent_sum(GroupPtr const &g, int p);

Rational deflation_number(GroupPtr const &g, int normal_subgroup);

long double_coset_count(GroupPtr const &g, int k, int l);
Rational orbit_pairing(BurnsideElt const &x, BurnsideElt const &y);

// number of generators of the class representative (0 unless cyclic)
long generator_count(GroupPtr const &g, int h_class);

ClassFunction linearize(BurnsideElt const &x);

enum class OpKind { res, ind, inf, def, iso };

using ElementaryData = std::variant<Embedding const *, Quotient const *, Isomorphism const *>;

/**
 * Elementary operation on Burnside elements. With bifree_p set, inflation and
 * deflation require a p'-kernel.
 */
BurnsideElt elementary_op(OpKind kind, ElementaryData data, BurnsideElt const &x,
                          std::optional<int> bifree_p = std::nullopt);

BurnsideElt restrict_to(Embedding const &e, BurnsideElt const &x);
BurnsideElt induce_from(Embedding const &e, BurnsideElt const &x);
BurnsideElt inflate(Quotient const &q, BurnsideElt const &x);
BurnsideElt deflate(Quotient const &q, BurnsideElt const &x);
BurnsideElt transport(Isomorphism const &f, BurnsideElt const &x);

} // namespace bisetkit
