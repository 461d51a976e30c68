#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "element_set.hpp"

namespace bisetkit {

using Perm = std::vector<std::uint16_t>;

class Group;
class SubgroupTable;
class SectionTable;
class AutomorphismGroup;

using GroupPtr = std::shared_ptr<Group const>;

/**
 * Finite permutation group with an exhaustive, lexicographically sorted
 * element list and a full multiplication table. Element 0 is the identity.
 * Products follow (a*b)(i) = a(b(i)).
 */
class Group : public std::enable_shared_from_this<Group>
{
public:
  static GroupPtr generate(std::vector<Perm> generators, std::string name = {});

  Group(Group const &) = delete;
  Group &operator=(Group const &) = delete;
  ~Group();

  std::size_t order() const { return _elements.size(); }
  unsigned degree() const { return _degree; }
  std::string const &name() const { return _name; }

  Perm const &perm(int i) const { return _elements[i]; }
  int index_of(Perm const &p) const;

  int identity() const { return 0; }
  int mul(int a, int b) const { return _mult[static_cast<std::size_t>(a) * order() + b]; }
  int inv(int a) const { return _inv[a]; }
  // g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), _inv[g]); }
  int element_order(int a) const { return _element_orders[a]; }
  int exponent() const;

  std::vector<int> const &generators() const { return _generators; }
  std::vector<int> const &small_generators() const;
  bool is_abelian() const;
  bool is_cyclic() const;

  std::size_t class_count() const { return _class_reps.size(); }
  int class_of(int x) const { return _class_of[x]; }
  std::vector<int> const &class_reps() const { return _class_reps; }
  std::vector<int> const &class_sizes() const { return _class_sizes; }
  std::vector<int> p_regular_classes(int p) const;

  ElementSet empty_set() const { return ElementSet(order()); }
  ElementSet all() const;
  ElementSet trivial() const;
  ElementSet closure(std::vector<int> const &gens) const;
  ElementSet conjugate(int g, ElementSet const &s) const;
  bool is_subgroup(ElementSet const &s) const;
  bool is_normal(ElementSet const &s) const;
  ElementSet center() const;
  ElementSet derived_subgroup() const;

  // FNV-1a over the multiplication table
  std::uint64_t table_hash() const;

  SubgroupTable const &subgroups() const;
  SectionTable const &sections() const;
  AutomorphismGroup const &automorphisms() const;
  int iso_id() const;

  GroupPtr ptr() const { return shared_from_this(); }

  // per-group memo for derived data; make() runs without holding the lock
  template<typename T, typename Make>
  T const &memo(std::string const &key, Make &&make) const
  {
    auto p = memo_any(key, [&] {
      return std::static_pointer_cast<void const>(std::make_shared<T const>(make()));
    });
    return *std::static_pointer_cast<T const>(p);
  }

private:
  Group() = default;

  std::shared_ptr<void const> memo_any(std::string const &key,
                                       std::function<std::shared_ptr<void const>()> const &make) const;

  unsigned _degree = 0;
  std::string _name;
  std::vector<Perm> _elements;
  std::vector<int> _mult;
  std::vector<int> _inv;
  std::vector<int> _element_orders;
  std::vector<int> _generators;
  std::vector<int> _class_of;
  std::vector<int> _class_reps;
  std::vector<int> _class_sizes;

  struct Lazy;
  std::unique_ptr<Lazy> _lazy;
};

/** Subgroup realized as a group of its own, with the inclusion map. */
struct Embedding
{
  GroupPtr parent;
  GroupPtr sub;
  int parent_subgroup = -1;       // index in the parent's subgroup table
  std::vector<int> to_parent;     // sub element -> parent element
};

/** Quotient by a normal subgroup, with the projection map. */
struct Quotient
{
  GroupPtr parent;
  GroupPtr group;
  int kernel = -1;                // index in the parent's subgroup table
  std::vector<int> projection;    // parent element -> quotient element
};

/** Group isomorphism given by its element map. */
struct Isomorphism
{
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;
};

Embedding const &subgroup_of(GroupPtr const &g, int subgroup);
Quotient const &quotient_of(GroupPtr const &g, int normal_subgroup);
Quotient quotient(GroupPtr const &g, ElementSet const &normal_subgroup);

/** Group from "C<n>", "D<2n>", "Q8", "Dic<4n>", "S<n>", "A<n>", products "AxB" or "[(1,2,3),(1,2)(3,4)]". */
GroupPtr make_named(std::string const &spec);

std::vector<std::string> library_names();

} // namespace bisetkit
