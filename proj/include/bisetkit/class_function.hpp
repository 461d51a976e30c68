#pragma once

#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"

namespace bisetkit {

/**
 * Class function on a group. With p = 0 the support is every conjugacy
 * class; otherwise it is the p-regular classes only, in class order.
 */
struct ClassFunction
{
  GroupPtr group;
  int p = 0;
  std::vector<Cyclotomic> values;

  static ClassFunction zero(GroupPtr const &g, int p = 0);
  static ClassFunction constant(GroupPtr const &g, Cyclotomic const &c, int p = 0);

  // class indices making up the support
  std::vector<int> support() const;
  std::size_t dimension() const { return values.size(); }

  bool defined_at(int element) const;
  Cyclotomic at(int element) const;

  // per-element values, zero where undefined
  std::vector<Cyclotomic> expand() const;
  static ClassFunction from_elements(GroupPtr const &g, std::vector<Cyclotomic> const &v, int p = 0);

  ClassFunction &operator+=(ClassFunction const &o);
  ClassFunction operator+(ClassFunction const &o) const;
  ClassFunction operator-(ClassFunction const &o) const;
  ClassFunction operator*(Cyclotomic const &c) const;
  // pointwise product
  ClassFunction pointwise(ClassFunction const &o) const;

  bool operator==(ClassFunction const &o) const;
  bool operator!=(ClassFunction const &o) const { return !(*this == o); }
  bool is_zero() const;
};

std::vector<int> support_classes(Group const &g, int p);

} // namespace bisetkit
