#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "burnside.hpp"
#include "group.hpp"
#include "rational.hpp"
#include "sections.hpp"

namespace bisetkit {

/** Classical bisets (p = 0) or p-bifree bisets for a prime p. */
struct Flavor
{
  int p = 0;

  static Flavor classical() { return {0}; }
  static Flavor bifree(int p) { return {p}; }

  bool is_bifree() const { return p != 0; }
  bool admits(int k1_order, int k2_order) const
  { return p == 0 || (k1_order % p != 0 && k2_order % p != 0); }

  bool operator==(Flavor const &o) const { return p == o.p; }
  bool operator!=(Flavor const &o) const { return p != o.p; }
  std::string to_string() const;
};

using PairSet = std::vector<std::pair<int, int>>;

/**
 * Transitive biset (H x G)/L in normal form: L = {(h,g) : h k1 = iso(g k2)}
 * for representative sections (p1,k1) of H and (p2,k2) of G.
 */
struct GoursatClass
{
  GroupPtr left;    // H
  GroupPtr right;   // G
  int left_section = -1;
  int right_section = -1;
  std::vector<int> iso;   // right quotient -> left quotient

  Section const &sec1() const { return left->sections()[left_section]; }
  Section const &sec2() const { return right->sections()[right_section]; }
  int p1() const { return sec1().top; }
  int k1() const { return sec1().bottom; }
  int p2() const { return sec2().top; }
  int k2() const { return sec2().bottom; }
  std::size_t quotient_order() const { return iso.size(); }
  std::size_t size() const;   // |L|

  PairSet pairs() const;
  std::string key() const;
  bool operator==(GoursatClass const &o) const;
};

// normal form of an arbitrary subgroup of H x G (not yet reduced to an orbit representative)
GoursatClass normalize(GroupPtr const &h, GroupPtr const &g, PairSet const &l);

class GoursatBasis
{
public:
  GoursatBasis(GroupPtr h, GroupPtr g, Flavor flavor, std::optional<std::size_t> quotient_order);

  GroupPtr const &left() const { return _left; }
  GroupPtr const &right() const { return _right; }
  Flavor flavor() const { return _flavor; }

  std::size_t size() const { return _classes.size(); }
  GoursatClass const &operator[](int i) const { return _classes[i]; }
  std::vector<GoursatClass> const &classes() const { return _classes; }

  int index_of(GoursatClass const &normal_form) const;
  int identify(PairSet const &l) const;

private:
  GroupPtr _left, _right;
  Flavor _flavor;
  std::vector<GoursatClass> _classes;
  std::unordered_map<std::string, int> _lookup;
};

using BasisPtr = std::shared_ptr<GoursatBasis const>;

/** Transitive classes of B(H,G), restricted to |q(L)| = quotient_order when given. */
BasisPtr goursat_basis(GroupPtr const &h, GroupPtr const &g, Flavor flavor,
                       std::optional<std::size_t> quotient_order = std::nullopt);

struct BisetElt
{
  BasisPtr basis;
  std::vector<Rational> coeffs;

  static BisetElt zero(GroupPtr const &h, GroupPtr const &g, Flavor flavor);
  static BisetElt basis_element(BasisPtr const &b, int i);
  static BisetElt identity(GroupPtr const &g, Flavor flavor);
  static BisetElt from_pairs(GroupPtr const &h, GroupPtr const &g, Flavor flavor, PairSet const &l);

  GroupPtr const &target() const { return basis->left(); }
  GroupPtr const &source() const { return basis->right(); }
  Flavor flavor() const { return basis->flavor(); }

  BisetElt &operator+=(BisetElt const &o);
  BisetElt operator+(BisetElt const &o) const;
  BisetElt operator-(BisetElt const &o) const;
  BisetElt operator*(Rational const &q) const;
  bool operator==(BisetElt const &o) const;
  bool operator!=(BisetElt const &o) const { return !(*this == o); }
  bool is_zero() const;
};

// raw subgroups of H x K, one per double coset
std::vector<PairSet> mackey_product(GoursatClass const &l, GoursatClass const &m);

BisetElt compose(BisetElt const &x, BisetElt const &y);
// composite of two transitive classes by orbit enumeration on X x_G Y
BisetElt compose_by_orbits(GoursatClass const &l, GoursatClass const &m, Flavor flavor);

BisetElt restriction_biset(Embedding const &e, Flavor flavor);
BisetElt induction_biset(Embedding const &e, Flavor flavor);
BisetElt inflation_biset(Quotient const &q, Flavor flavor);
BisetElt deflation_biset(Quotient const &q, Flavor flavor);
BisetElt isomorphism_biset(Isomorphism const &f, Flavor flavor);
BisetElt elementary(OpKind kind, ElementaryData data, Flavor flavor);

/** Ind^H_{p1} Inf^{p1}_{p1/k1} Iso Def^{p2}_{p2/k2} Res^G_{p2} */
struct ElementaryWord
{
  Embedding const *left_embedding = nullptr;
  Quotient const *left_quotient = nullptr;
  Isomorphism iso;
  Quotient const *right_quotient = nullptr;
  Embedding const *right_embedding = nullptr;

  BisetElt ind, inf, iso_biset, def, res;

  BisetElt product() const;
};

ElementaryWord factorize(GoursatClass const &l, Flavor flavor);

// coefficients over Out(G) classes
std::vector<Rational> essential_projection(BisetElt const &x);
// Out(G) class of a transitive class with |q(L)| = |G|, or -1
int essential_class(GoursatClass const &l);

BisetElt opposite(BisetElt const &x);

BurnsideElt to_burnside(BisetElt const &x);
BisetElt from_burnside(BurnsideElt const &x, Flavor flavor);
Rational biset_pairing(GroupPtr const &g, BisetElt const &x, BisetElt const &y);

// action on Burnside modules: along the factorization, and by the Mackey formula directly
BurnsideElt act_on_burnside(GoursatClass const &l, BurnsideElt const &x, Flavor flavor);
BurnsideElt act_on_burnside_direct(GoursatClass const &l, BurnsideElt const &x);
BurnsideElt act_on_burnside(BisetElt const &x, BurnsideElt const &u);

} // namespace bisetkit
