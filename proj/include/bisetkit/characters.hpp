#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biset.hpp"
#include "burnside.hpp"
#include "class_function.hpp"
#include "cyclotomic.hpp"

namespace bisetkit {

// elementary actions on class functions; a p-regular f (f.p != 0) needs p'-kernels
ClassFunction restrict_cf(Embedding const &e, ClassFunction const &f);
ClassFunction induce_cf(Embedding const &e, ClassFunction const &f);
ClassFunction inflate_cf(Quotient const &q, ClassFunction const &f);
ClassFunction deflate_cf(Quotient const &q, ClassFunction const &f);
ClassFunction transport_cf(Isomorphism const &f, ClassFunction const &x);
ClassFunction act(OpKind kind, ElementaryData data, ClassFunction const &f);

// along factorize()
ClassFunction act(GoursatClass const &l, ClassFunction const &f, Flavor flavor);
ClassFunction act(BisetElt const &x, ClassFunction const &f);
// fixed-point formula for C X (x) V, summed directly over the transitive biset
ClassFunction act_fixed_points(GoursatClass const &l, ClassFunction const &f);

ClassFunction decomposition_map(ClassFunction const &f, int p);

/** Shared cyclic group C_m, element k standing for the residue k mod m. */
GroupPtr cyclic_group(int m);
int cyclic_element(int m, long residue);

/** Character of (Z/m)^x given by exponents on a fixed generating set. */
class UnitCharacter
{
public:
  static UnitCharacter trivial(long m);
  static UnitCharacter from_exponents(long m, std::vector<long> exponents);
  static UnitCharacter from_values(long m, std::vector<Cyclotomic> const &table);
  static std::vector<UnitCharacter> all(long m);

  long modulus() const { return _m; }
  // generators of (Z/m)^x, one per cyclic factor, and their orders
  std::vector<long> const &generators() const { return _gens; }
  std::vector<long> const &generator_orders() const { return _orders; }
  std::vector<long> const &exponents() const { return _exps; }
  long order() const;

  Cyclotomic operator()(long a) const;
  // indexed by residue, zero off the units
  std::vector<Cyclotomic> table() const;

  long conductor() const;
  bool is_primitive() const { return conductor() == _m; }
  // character of the coprime factor d of m
  UnitCharacter factor(long d) const;

  // "mod m [e1,e2]"
  std::string to_string() const;

  bool operator==(UnitCharacter const &o) const { return _m == o._m && _exps == o._exps; }

private:
  long _m = 1;
  std::vector<long> _gens, _orders, _exps;
};

std::pair<UnitCharacter, UnitCharacter> p_split(UnitCharacter const &xi, int p);
bool pprime_part_primitive(UnitCharacter const &xi, int p);

ClassFunction dirichlet_tilde(long m, UnitCharacter const &xi);
ClassFunction xi_mnp(long m, int n, int p, UnitCharacter const &xi);

// row-reduced basis of span{ act(x, gen) : x in goursat_basis(H, G0, flavor) }
std::vector<ClassFunction> subfunctor_span(ClassFunction const &gen, GroupPtr const &h, Flavor flavor);

} // namespace bisetkit
