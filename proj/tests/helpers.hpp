#pragma once

#include <string>

#include "bisetkit/group.hpp"
#include "bisetkit/subgroups.hpp"

namespace testing {

// first subgroup class whose representative has the given order
inline int class_of_order(bisetkit::GroupPtr const &g, int order)
{
  auto const &tab = g->subgroups();
  for (std::size_t c = 0; c < tab.class_count(); ++c)
    if (tab[tab.class_rep(static_cast<int>(c))].order == order)
      return static_cast<int>(c);
  return -1;
}

inline int subgroup_of_order(bisetkit::GroupPtr const &g, int order)
{
  int c = class_of_order(g, order);
  return c < 0 ? -1 : g->subgroups().class_rep(c);
}

} // namespace testing
